#include "polyphase/thresholds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polyphase/specfun.hpp"

namespace polyphase {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kEndpointGuard = 1e-6;  // psi terms are singular at 0 and 1
constexpr double kArgTol = 1e-10;
constexpr double kTangencyTol = 1e-6;

double objective(Family fam, TransitionKind kind, double nu, double g) {
  ExponentPoint p{nu, g};
  double v = psi_net(fam, p);
  if (kind == TransitionKind::Weak) v -= psi_face(fam, p);
  return v;
}

// golden-section maximization on [lo,hi]
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double tol) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc > fd) {
      b = d; d = c; fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c; c = d; fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return fc > fd ? c : d;
}

// sup over nu in [delta, 1) at fixed gamma
double sup_over_nu(Family fam, TransitionKind kind, double delta, double g,
                   int grid) {
  const double nu_hi = 1.0 - kEndpointGuard;
  if (delta >= nu_hi) return objective(fam, kind, nu_hi, g);
  double best = -kInf;
  double best_nu = delta;
  for (int i = 0; i < grid; ++i) {
    const double nu = delta + (nu_hi - delta) * i / (grid - 1);
    const double v = objective(fam, kind, nu, g);
    if (v > best) { best = v; best_nu = nu; }
  }
  const double span = (nu_hi - delta) / (grid - 1);
  const double lo = std::max(delta, best_nu - span);
  const double hi = std::min(nu_hi, best_nu + span);
  const double nu_star =
      golden_max([&](double nu) { return objective(fam, kind, nu, g); }, lo, hi, kArgTol);
  return std::max(best, objective(fam, kind, nu_star, g));
}

}  // namespace

double maximal(Family fam, TransitionKind kind, double delta, double rho, int grid) {
  if (!(delta > 0.0 && delta < 1.0)) throw std::domain_error("maximal: delta outside (0,1)");
  if (!(rho >= 0.0 && rho < 1.0)) throw std::domain_error("maximal: rho outside [0,1)");
  if (rho <= 0.0) return -kInf;
  double best = -kInf;
  double best_g = rho;
  for (int j = 1; j <= grid; ++j) {
    const double g = rho * j / grid;
    const double v = sup_over_nu(fam, kind, delta, g, grid);
    if (v > best) { best = v; best_g = g; }
  }
  const double span = rho / grid;
  const double lo = std::max(rho * 1e-6, best_g - span);
  const double hi = std::min(rho, best_g + span);
  const double g_star = golden_max(
      [&](double g) { return sup_over_nu(fam, kind, delta, g, grid); }, lo, hi, kArgTol);
  best = std::max(best, sup_over_nu(fam, kind, delta, g_star, grid));
  // corner evaluated explicitly; the small-delta maxima sit exactly there
  best = std::max(best, objective(fam, kind, delta, rho));
  return best;
}

double rho_threshold(Family fam, TransitionKind kind, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("rho_threshold: delta outside (0,1)");
  // M[.](delta, .) is nondecreasing in rho.  The strong objective crosses
  // zero transversally; the weak one attains its maximum 0 tangentially and
  // then stays flat, so its computed plateau sits within solver noise of
  // zero without a sign change.  Bisecting M >= -1e-7 handles both: the
  // belt admits the tangent plateau, and for a transversal crossing the
  // detected point is within 1e-7/slope of the true zero.
  constexpr double kTouchBelt = 1e-7;
  auto reached = [&](double rho) {
    return maximal(fam, kind, delta, rho) >= -kTouchBelt;
  };
  const double step = 1.0 / 256.0;
  std::vector<double> scan;
  for (double r = step / 64.0; r < step; r *= 2.0) scan.push_back(r);
  for (double r = step; r < 1.0; r += step) scan.push_back(r);
  double lo = 0.0, hi = -1.0;
  for (double r : scan) {
    if (reached(r)) { hi = r; break; }
    lo = r;
  }
  if (hi < 0.0) {
    std::ostringstream os;
    os << "rho_threshold: no bracket found; M at rho->1 is "
       << maximal(fam, kind, delta, scan.back());
    throw std::runtime_error(os.str());
  }
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if (reached(mid)) hi = mid;
    else lo = mid;
  }
  return 0.5 * (lo + hi);
}

double asymptotic_rho(Family fam, TransitionKind kind, double delta) {
  if (!(delta > 0.0 && delta < 1.0))
    throw std::domain_error("asymptotic_rho: delta outside (0,1)");
  if (kind == TransitionKind::Weak) {
    const double l = std::log(1.0 / delta);
    if (l < 1.0) throw std::domain_error("asymptotic_rho: delta too large (log(1/delta) < 1)");
    return 1.0 / (2.0 * l);
  }
  const double c = fam == Family::Simplex ? 2.0 * kSqrtPi : kSqrtPi;
  const double l = -std::log(delta * c);
  if (l < 1.0) throw std::domain_error("asymptotic_rho: delta too large (|log(delta c)| < 1)");
  const double e = 2.71828182845904523536;
  return 1.0 / (2.0 * e * l);
}

PhaseCurve phase_curve(Family fam, TransitionKind kind,
                       const std::vector<double>& delta_grid) {
  if (delta_grid.empty()) throw std::domain_error("phase_curve: empty grid");
  for (size_t i = 0; i + 1 < delta_grid.size(); ++i)
    if (!(delta_grid[i] < delta_grid[i + 1]))
      throw std::domain_error("phase_curve: deltas must be strictly increasing");

  std::vector<double> rho(delta_grid.size());
  const unsigned workers =
      std::min<unsigned>(std::max<unsigned>(1, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(delta_grid.size()));
  if (workers > 1 && delta_grid.size() > 2) {
    std::vector<std::future<void>> fs;
    std::atomic<size_t> next{0};
    for (unsigned w = 0; w < workers; ++w)
      fs.push_back(std::async(std::launch::async, [&]() {
        for (size_t i = next.fetch_add(1); i < delta_grid.size(); i = next.fetch_add(1))
          rho[i] = rho_threshold(fam, kind, delta_grid[i]);
      }));
    for (auto& f : fs) f.get();
  } else {
    for (size_t i = 0; i < delta_grid.size(); ++i)
      rho[i] = rho_threshold(fam, kind, delta_grid[i]);
  }

  PhaseCurve curve{fam, kind, {}};
  curve.samples.reserve(delta_grid.size());
  for (size_t i = 0; i < delta_grid.size(); ++i) {
    if (!(rho[i] > 0.0 && rho[i] < 1.0))
      throw std::runtime_error("phase_curve: rho outside (0,1)");
    if (i > 0 && !(rho[i] > rho[i - 1]))
      throw std::runtime_error("phase_curve: rho not strictly increasing in delta");
    curve.samples.push_back({delta_grid[i], rho[i]});
  }
  return curve;
}

}  // namespace polyphase
