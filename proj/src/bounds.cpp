#include "polyphase/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "polyphase/specfun.hpp"

namespace polyphase {

namespace {

void check_triple(const TripleKNN& t) {
  if (!(t.k >= 1 && t.k <= t.n && t.n <= t.N - 1))
    throw std::domain_error("bounds: need 1 <= k <= n <= N-1");
}

double clamp_open(double x) {
  const double eps = 1e-12;
  return std::fmin(std::fmax(x, eps), 1.0 - eps);
}

// per-l exponent of Theorem-style bounds; subtract_face selects the weak form.
// psi_int is linear in nu, so nu_tilde = (l+2)/N > 1 at the top of the l-range
// is handled exactly via nu_tilde * psi_int(1, gamma_tilde).
double max_exponent(Family fam, const TripleKNN& t, bool subtract_face) {
  double best = -1e300;
  for (int l = t.n + 1; l <= t.N - 1; l += 2) {
    const double nu = clamp_open(static_cast<double>(l) / t.N);
    const double g = static_cast<double>(t.k) / l;
    const PerturbedVars pv = perturbed_vars(t.k, l, t.N);
    ExponentPoint p{nu, g};
    double E = psi_com(fam, p) - pv.nu_tilde * psi_int({1.0, pv.gamma_tilde});
    E -= fam == Family::Simplex ? psi_ext(fam, nu) : psi_ext(fam, clamp_open(pv.nu_hat));
    if (subtract_face) E -= psi_face(fam, p);
    if (E > best) best = E;
  }
  return best;
}

BoundResult assemble(double log_prefactor, double N_times_E) {
  const double logv = log_prefactor + N_times_E;
  double v;
  if (logv > 700.0) v = std::numeric_limits<double>::infinity();
  else if (logv < -745.0) v = 0.0;
  else v = std::exp(logv);
  return BoundResult{v, logv};
}

}  // namespace

PerturbedVars perturbed_vars(int k, int l, int N) {
  return PerturbedVars{static_cast<double>(l) / N + 0.5 / N,
                       static_cast<double>(l + 2) / N,
                       static_cast<double>(k + 1) / (l + 2)};
}

BoundResult strong_bound(Family fam, const TripleKNN& t) {
  check_triple(t);
  if (t.n + 1 > t.N - 1) return BoundResult{0.0, -std::numeric_limits<double>::infinity()};
  const double E = max_exponent(fam, t, false);
  return assemble(5.0 * std::log(t.N + 3.0), t.N * E);
}

BoundResult weak_bound(Family fam, const TripleKNN& t) {
  check_triple(t);
  if (t.n + 1 > t.N - 1) return BoundResult{0.0, -std::numeric_limits<double>::infinity()};
  const double E = max_exponent(fam, t, true);
  return assemble(5.5 * std::log(t.N + 3.0), t.N * E);
}

PhaseCurve level_curve(Family fam, TransitionKind kind, int N, double level,
                       const std::vector<double>& delta_grid) {
  if (!(level > 0.0)) throw std::domain_error("level_curve: level must be positive");
  const double log_level = std::log(level);
  PhaseCurve curve{fam, kind, {}};
  for (double d : delta_grid) {
    const int n = static_cast<int>(std::ceil(d * N));
    double rho = 0.0;
    if (n >= 1 && n <= N - 1) {
      if (std::isinf(level)) {
        rho = 1.0 - 1.0 / n;
      } else {
        // bound is nondecreasing in k: binary search the largest admissible k
        auto ok = [&](int k) {
          const TripleKNN t{k, n, N};
          const BoundResult b = kind == TransitionKind::Strong ? strong_bound(fam, t)
                                                               : weak_bound(fam, t);
          return b.log_value <= log_level;
        };
        int lo = 0, hi = n;  // ok(0) vacuously true (empty exponent set excluded below)
        if (n >= 1 && ok(1)) {
          lo = 1;
          while (lo < hi) {
            const int mid = (lo + hi + 1) / 2;
            if (ok(mid)) lo = mid;
            else hi = mid - 1;
          }
        } else {
          lo = 0;
        }
        rho = static_cast<double>(lo) / n;
      }
    }
    curve.samples.push_back({d, rho});
  }
  return curve;
}

double rv_bound(int k, int n, int N) {
  if (!(k >= 1 && k < n && n < N)) throw std::domain_error("rv_bound: need 1 <= k < n < N");
  const double c1 = 6.0 + 4.0 * kSqrt2;
  const double c3 = std::exp(1.5);
  const double m = c1 * k * std::log(c3 * N / k);
  const double diff = std::sqrt(static_cast<double>(n)) - std::sqrt(m);
  if (!(diff > 0.0)) return 3.5;
  return 3.5 * std::exp(-diff * diff / 18.0);
}

}  // namespace polyphase
