#ifndef POLYPHASE_EXPONENTS_HPP
#define POLYPHASE_EXPONENTS_HPP

// Exponential growth/decay rates of the three factors in the expected
// face-count identity (combinatorial, internal angle, external angle), the
// face-count exponent, and their net combination.  Arguments live in the
// rectangle 0 < nu <= 1, 0 <= gamma < 1.
//
// At gamma = 0 the internal exponent diverges; psi_int returns +inf and
// psi_net -inf so that maximal scans over [0, rho] are total.

#include "polyphase/duals.hpp"

namespace polyphase {

struct ExponentPoint {
  double nu;     // in (0,1]
  double gamma;  // in [0,1)
};

bool valid_point(const ExponentPoint& p);

// Memoized duals, keyed on the argument rounded to a 1e-14 grid.  Caches are
// thread-local; concurrent callers each own a private table.
double cached_y_gamma(double gamma);
double cached_external_argmin(Family family, double nu);

double psi_com(Family family, const ExponentPoint& p);
double psi_int(const ExponentPoint& p);  // identical for both families
double psi_ext(Family family, double nu);
double psi_face(Family family, const ExponentPoint& p);
double psi_net(Family family, const ExponentPoint& p);

// psi_nu''(argmin) of the external-angle exponent integrand.
double psi_ext_second_deriv(Family family, double nu);

}  // namespace polyphase

#endif
