#ifndef POLYPHASE_QUADRATURE_HPP
#define POLYPHASE_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace polyphase {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on (-1,1)
  std::vector<double> weights;
};

// Nodes by Newton iteration on P_n; cached per order.
const GaussLegendreRule& gauss_legendre(int n);

// Composite Gauss-Legendre over [a,b], `panels` subintervals of order `order`.
double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int order);

// Panel doubling until successive estimates agree to rel_tol (abs_floor guards
// integrals that are legitimately ~0).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_floor = 1e-300,
                          int initial_panels = 8, int order = 40,
                          int max_doublings = 12);

}  // namespace polyphase

#endif
