#include "polyphase/duals.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "polyphase/specfun.hpp"

namespace polyphase {

double bracketed_newton(const std::function<double(double)>& f,
                        const std::function<double(double)>& df,
                        double lo, double hi, double x0,
                        double residual_tol, int iteration_cap) {
  double flo = f(lo), fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::runtime_error("bracketed_newton: no sign change on bracket");
  double x = std::fmin(std::fmax(x0, lo), hi);
  double fx = f(x);
  for (int it = 0; it < iteration_cap; ++it) {
    if (std::fabs(fx) <= residual_tol) {
      // Newton polish: the residual stop alone can leave an argument error of
      // residual_tol / f', large wherever the defining function is flat
      for (int p = 0; p < 3; ++p) {
        const double d = df(x);
        if (d == 0.0 || !std::isfinite(d)) break;
        const double step = fx / d;
        const double xn = x - step;
        if (!(xn > lo && xn < hi) || xn == x) break;
        const double fn = f(xn);
        if (std::fabs(fn) > std::fabs(fx)) break;
        x = xn;
        fx = fn;
        if (fx == 0.0) break;
      }
      return x;
    }
    // keep the bracket around the root
    if ((fx > 0.0) == (fhi > 0.0)) { hi = x; fhi = fx; }
    else { lo = x; flo = fx; }
    double xn;
    const double d = df(x);
    if (d != 0.0 && std::isfinite(d)) {
      xn = x - fx / d;
      if (!(xn > lo && xn < hi)) xn = 0.5 * (lo + hi);
    } else {
      xn = 0.5 * (lo + hi);
    }
    if (xn == x) xn = 0.5 * (lo + hi);
    x = xn;
    fx = f(x);
    if (hi - lo < 1e-300) break;
  }
  if (std::fabs(fx) <= residual_tol) return x;
  std::ostringstream os;
  os << "bracketed_newton: no convergence, residual " << fx;
  throw std::runtime_error(os.str());
}

GammaDual solve_s_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("solve_s_gamma: gamma outside (0,1)");
  const double target = 1.0 - gamma;
  auto f = [target](double s) { return mills_R(s) - target; };
  // dR/ds = (s + 1/s) R(s) - s
  auto df = [](double s) { return (s + 1.0 / s) * mills_R(s) - s; };
  double hi = 2.0;
  while (f(hi) < 0.0) hi *= 2.0;
  double guess = gamma < 0.5 ? approximant(Approximant::s_tilde, gamma) : 1.0;
  if (!(guess > 0.0)) guess = 1.0;
  const double s = bracketed_newton(f, df, 1e-300, hi, guess);
  return GammaDual{gamma, s, gamma * s / (1.0 - gamma)};
}

namespace {

// The defining equation 2 x Q(x)/q(x) + 1 - 1/nu = 0 has scale 1/nu near the
// root; it is solved in the nu-scaled O(1) form
//   nu * 2 sqrt(pi) x e^{x^2} CDF(x) + nu - 1 = 0
// so the 1e-12 residual tolerance is meaningful in doubles for tiny nu.
double simplex_resid(double x, double nu) {
  return nu * 2.0 * kSqrtPi * x * std::exp(x * x) * gauss_cdf(GaussKind::Q_centered, x) +
         nu - 1.0;
}
double simplex_dresid(double x, double nu) {
  return nu * (2.0 * x + 2.0 * kSqrtPi * (1.0 + 2.0 * x * x) * std::exp(x * x) *
                             gauss_cdf(GaussKind::Q_centered, x));
}
// cross analogue with G(y) = erf(y), g(y) = 2 pi^{-1/2} e^{-y^2}
double cross_resid(double y, double nu) {
  return nu * kSqrtPi * y * std::exp(y * y) * std::erf(y) + nu - 1.0;
}
double cross_dresid(double y, double nu) {
  return nu * (kSqrtPi * (1.0 + 2.0 * y * y) * std::exp(y * y) * std::erf(y) + 2.0 * y);
}

}  // namespace

NuDual solve_external_argmin(Family family, double nu) {
  if (!(nu > 0.0 && nu < 1.0))
    throw std::domain_error("solve_external_argmin: nu outside (0,1)");
  const bool simplex = family == Family::Simplex;
  auto f = [&](double x) { return simplex ? simplex_resid(x, nu) : cross_resid(x, nu); };
  auto df = [&](double x) { return simplex ? simplex_dresid(x, nu) : cross_dresid(x, nu); };
  const double z = simplex ? 1.0 / (2.0 * nu * kSqrtPi) : 1.0 / (nu * kSqrtPi);
  double guess, hi;
  if (std::log(z) > 1.0) {
    guess = approximant(simplex ? Approximant::x_tilde_plus : Approximant::y_tilde_pm, nu);
    hi = guess + 2.0;
  } else {
    guess = 0.5;
    hi = 2.0;
  }
  while (f(hi) < 0.0) hi += 1.0;
  const double x = bracketed_newton(f, df, 0.0, hi, guess);
  return NuDual{family, nu, x};
}

SaddlePoint solve_saddlepoint_z(double gamma) {
  if (!(gamma > 0.0 && gamma < 1.0))
    throw std::domain_error("solve_saddlepoint_z: gamma outside (0,1)");
  auto f = [gamma](double z) { return -z / (1.0 - gamma) - phi_over_phi_cdf(z); };
  // d/dz [phi/Phi] = -(phi/Phi)(z + phi/Phi)
  auto df = [gamma](double z) {
    const double r = phi_over_phi_cdf(z);
    return -1.0 / (1.0 - gamma) + r * (z + r);
  };
  double lo = -2.0;
  while (f(lo) <= 0.0) lo *= 2.0;  // f > 0 for z negative enough
  const double guess = -solve_s_gamma(gamma).s_gamma;
  const double z = bracketed_newton(f, df, lo, -1e-300, guess);
  return SaddlePoint{gamma, z};
}

}  // namespace polyphase
