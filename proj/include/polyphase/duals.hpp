#ifndef POLYPHASE_DUALS_HPP
#define POLYPHASE_DUALS_HPP

// Solvers for the implicitly defined dual variables:
//   s_gamma : R(s) = 1 - gamma,         y_gamma = gamma s_gamma / (1 - gamma)
//   x_nu    : 2 x Q(x)/q(x) + 1 - 1/nu = 0     (simplex external minimizer)
//   y_nu    : 2 y G(y)/g(y) + 1 - 1/nu = 0     (cross-polytope analogue)
//   z_gamma : -z/(1-gamma) = phi(z)/Phi(z), z < 0   (internal-angle saddlepoint)
// Each is found by safeguarded Newton inside a verified sign-change bracket,
// with bisection fallback; residual tolerance 1e-12, iteration cap 200.

#include <functional>

namespace polyphase {

enum class Family { Simplex, CrossPolytope };

struct GammaDual {
  double gamma;
  double s_gamma;
  double y_gamma;  // gamma * s_gamma / (1 - gamma)
};

struct NuDual {
  Family family;
  double nu;
  double argmin;  // x_nu for Simplex, y_nu for CrossPolytope
};

struct SaddlePoint {
  double gamma;
  double z_gamma;  // < 0
};

inline constexpr double kDualResidualTol = 1e-12;
inline constexpr int kDualIterationCap = 200;

GammaDual solve_s_gamma(double gamma);
NuDual solve_external_argmin(Family family, double nu);
SaddlePoint solve_saddlepoint_z(double gamma);

// Generic safeguarded Newton on a verified bracket [lo,hi] with f(lo) and
// f(hi) of opposite sign.  Falls back to bisection whenever the Newton step
// leaves the bracket or fails to shrink the residual.
double bracketed_newton(const std::function<double(double)>& f,
                        const std::function<double(double)>& df,
                        double lo, double hi, double x0,
                        double residual_tol = kDualResidualTol,
                        int iteration_cap = kDualIterationCap);

}  // namespace polyphase

#endif
