#ifndef POLYPHASE_SPECFUN_HPP
#define POLYPHASE_SPECFUN_HPP

// Scalar special functions used throughout: base-e Shannon entropy, the
// Gaussian CDF variants Q (mean 0, sd 1/sqrt(2)), G (half-normal / error
// function) and Phi (standard normal), the scaled Mills-type ratio R(s),
// and the closed-form asymptotic approximants for the dual variables and
// small-delta comparison curves.

#include <stdexcept>

namespace polyphase {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kSqrt2 = 1.4142135623730950488;
inline constexpr double kLog2 = 0.69314718055994530942;

enum class GaussKind { Q_centered, G_halfnormal, Phi_standard };

// H(p) = p log(1/p) + (1-p) log(1/(1-p)), H(0) = H(1) = 0.
double entropy(double p);

// Scaled complementary error function exp(x^2) erfc(x), x >= 0.
// Continued fraction for large x; never overflows.
double erfcx_pos(double x);

double gauss_cdf(GaussKind kind, double x);

// log(2*Phi(z)), stable for z << 0.
double log_two_phi(double z);

// phi(z)/Phi(z), the normal hazard-type ratio, stable for z << 0.
double phi_over_phi_cdf(double z);

// R(s) = s e^{s^2/2} int_s^inf e^{-y^2/2} dy.  R(0)=0, R(inf)=1.
double mills_R(double s);

enum class Approximant {
  s_tilde,        // gamma^{-1/2} - (3/2) gamma^{1/2}
  x_tilde_plus,   // [log z - 1/2 log log z]^{1/2}, z = (2 nu sqrt(pi))^{-1}
  y_tilde_pm,     // same with z = (nu sqrt(pi))^{-1}
  r_strong_plus,  // |tau log(delta 2 sqrt(pi))|^{-1}
  r_strong_pm,    // |tau log(delta sqrt(pi))|^{-1}
  r_weak          // [tau log(1/delta)]^{-1}
};

double approximant(Approximant which, double arg, double tau = 0.0);

}  // namespace polyphase

#endif
