#include "polyphase/exponents.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "polyphase/specfun.hpp"

namespace polyphase {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// round to the 1e-14 memo grid; arguments below the grid resolution are keyed
// by their exact bit pattern so nearby tiny values cannot collide at zero
int64_t memo_key(double x) {
  if (x < 1e-9) {
    int64_t bits;
    std::memcpy(&bits, &x, sizeof bits);
    return bits;  // disjoint from grid keys: below 1e5 in grid units
  }
  return static_cast<int64_t>(std::llround(x * 1e14));
}

}  // namespace

bool valid_point(const ExponentPoint& p) {
  return p.nu > 0.0 && p.nu <= 1.0 && p.gamma >= 0.0 && p.gamma < 1.0 &&
         p.nu * p.gamma < 1.0;
}

double cached_y_gamma(double gamma) {
  thread_local std::unordered_map<int64_t, double> cache;
  const int64_t key = memo_key(gamma);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const double y = solve_s_gamma(gamma).y_gamma;
  cache.emplace(key, y);
  return y;
}

double cached_external_argmin(Family family, double nu) {
  thread_local std::unordered_map<int64_t, double> cache_s, cache_c;
  auto& cache = family == Family::Simplex ? cache_s : cache_c;
  const int64_t key = memo_key(nu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const double x = solve_external_argmin(family, nu).argmin;
  cache.emplace(key, x);
  return x;
}

double psi_com(Family family, const ExponentPoint& p) {
  if (!valid_point(p)) throw std::domain_error("psi_com: invalid point");
  double v = entropy(p.nu) + p.nu * entropy(p.gamma);
  if (family == Family::CrossPolytope) v += p.nu * kLog2;
  return v;
}

double psi_int(const ExponentPoint& p) {
  if (!(p.nu > 0.0 && p.nu <= 1.0 && p.gamma >= 0.0 && p.gamma < 1.0))
    throw std::domain_error("psi_int: invalid point");
  if (p.gamma == 0.0) return kInf;
  const double g = p.gamma;
  const double y = cached_y_gamma(g);
  return p.nu * (1.0 - g) *
         (std::log(y / g) + 0.5 * std::log(2.0 * kPi) + (g - 1.0) / (2.0 * g) * y * y);
}

double psi_ext(Family family, double nu) {
  if (!(nu > 0.0 && nu < 1.0)) throw std::domain_error("psi_ext: nu outside (0,1)");
  const double t = cached_external_argmin(family, nu);
  if (family == Family::Simplex)
    return nu * t * t - (1.0 - nu) * std::log(gauss_cdf(GaussKind::Q_centered, t));
  return nu * t * t - (1.0 - nu) * std::log(gauss_cdf(GaussKind::G_halfnormal, t));
}

double psi_face(Family family, const ExponentPoint& p) {
  if (!valid_point(p)) throw std::domain_error("psi_face: invalid point");
  double v = entropy(p.nu * p.gamma);
  if (family == Family::CrossPolytope) v += p.nu * p.gamma * kLog2;
  return v;
}

double psi_net(Family family, const ExponentPoint& p) {
  if (p.gamma == 0.0) return -kInf;
  return psi_com(family, p) - psi_int(p) - psi_ext(family, p.nu);
}

double psi_ext_second_deriv(Family family, double nu) {
  if (!(nu > 0.0 && nu < 1.0))
    throw std::domain_error("psi_ext_second_deriv: nu outside (0,1)");
  // psi'' at the argmin, both families: differentiate density/CDF twice and
  // eliminate the ratio via the defining equation, giving
  //   2 nu (1 + 2 t^2 / (1 - nu)).
  const double t = cached_external_argmin(family, nu);
  return 2.0 * nu * (1.0 + 2.0 * t * t / (1.0 - nu));
}

}  // namespace polyphase
