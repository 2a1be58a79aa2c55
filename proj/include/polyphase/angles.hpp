#ifndef POLYPHASE_ANGLES_HPP
#define POLYPHASE_ANGLES_HPP

// Numerical internal and external angles of the simplex and cross-polytope,
// exact face counts, and the expected-face-count discrepancy
//   Delta(k,n,N;Q) = 2 sum'_l sum_F sum_G beta(F,G) alpha(G,Q)
// at small sizes.

#include <boost/multiprecision/cpp_int.hpp>

#include "polyphase/duals.hpp"

namespace polyphase {

enum class AngleMethod { Quadrature, Saddlepoint, Oracle };

// alpha(T^l, T^{N-1}) or alpha(F^l, C^N) via the tail-integral formulas
//   sqrt((l+1)/pi) int_0^inf e^{-(l+1)x^2} CDF(x)^{N-l-1} dx
// with CDF = Q for the simplex and G for the cross-polytope.
double external_angle(Family family, int l, int N);

// The Gruenbaum external angle.  For the cross-polytope this equals
// external_angle; for the simplex the normal cone's common component can be
// negative, which adds the x < 0 half-axis to the integral.  This is the
// angle the Affentranger-Schneider identity consumes (the half-line variant
// drops an exponentially small piece and is kept as the published surface).
double external_angle_exact(Family family, int l, int N);

// beta(T^k, T^l): fraction of the sphere at a k-face of T^l.
//  - Oracle: characteristic-function inversion of the conditional-Gaussian
//    orthant identity, with the half-normal transform evaluated by nested
//    quadrature (imaginary part must vanish to 1e-10).
//  - Saddlepoint: Laplace evaluation at the real negative saddle z_gamma of
//    psi_gamma(z) = z^2/2 + (1-gamma) log(2 Phi(z)), gamma = (k+1)/(l+1).
double internal_angle(int k, int l, AngleMethod method);

struct FaceCount {
  boost::multiprecision::cpp_int exact;
  double log_value;  // natural log
};

// f_k(T^{N-1}) = C(N,k+1);  f_k(C^N) = 2^{k+1} C(N,k+1).
FaceCount face_count(Family family, int k, int N);

// Expected faces lost under random projection to dimension n; exact small-size
// evaluation of the alternating-dimension sum l = n+1, n+3, ..., l < N.
double discrepancy_delta(Family family, int k, int n, int N);

}  // namespace polyphase

#endif
