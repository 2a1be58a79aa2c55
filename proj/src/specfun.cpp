#include "polyphase/specfun.hpp"

#include <cmath>
#include <limits>

namespace polyphase {

double entropy(double p) {
  if (p < 0.0 || p > 1.0) throw std::domain_error("entropy: p outside [0,1]");
  if (p == 0.0 || p == 1.0) return 0.0;
  return p * std::log(1.0 / p) + (1.0 - p) * std::log(1.0 / (1.0 - p));
}

double erfcx_pos(double x) {
  if (x < 0.0) throw std::domain_error("erfcx_pos: x < 0");
  if (x < 2.5) return std::exp(x * x) * std::erfc(x);
  // Laplace continued fraction 1/sqrt(pi) / (x + (1/2)/(x + (2/2)/(x + ...))).
  double cf = 0.0;
  for (int n = 64; n >= 1; --n) cf = 0.5 * n / (x + cf);
  return 1.0 / (kSqrtPi * (x + cf));
}

double gauss_cdf(GaussKind kind, double x) {
  switch (kind) {
    case GaussKind::Q_centered:
      return 0.5 * std::erfc(-x);
    case GaussKind::G_halfnormal:
      if (x < 0.0) throw std::domain_error("gauss_cdf: G requires x >= 0");
      return std::erf(x);
    case GaussKind::Phi_standard:
      return 0.5 * std::erfc(-x / kSqrt2);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

double log_two_phi(double z) {
  if (z >= 0.0) return std::log(2.0 * gauss_cdf(GaussKind::Phi_standard, z));
  return -0.5 * z * z + std::log(erfcx_pos(-z / kSqrt2));
}

double phi_over_phi_cdf(double z) {
  if (z >= 0.0) {
    const double phi = std::exp(-0.5 * z * z) / std::sqrt(2.0 * kPi);
    return phi / gauss_cdf(GaussKind::Phi_standard, z);
  }
  return std::sqrt(2.0 / kPi) / erfcx_pos(-z / kSqrt2);
}

double mills_R(double s) {
  if (s < 0.0) throw std::domain_error("mills_R: s < 0");
  if (s == 0.0) return 0.0;
  // R(s) = s sqrt(pi/2) erfcx(s/sqrt(2)); the scaled form avoids the
  // overflow/cancellation of evaluating e^{s^2/2} and the tail separately.
  return s * std::sqrt(kPi / 2.0) * erfcx_pos(s / kSqrt2);
}

namespace {

// [log z - 1/2 log log z]^{1/2}; log log is undefined for z <= e.
double tail_inverse_approx(double z) {
  const double lz = std::log(z);
  if (lz <= 1.0) throw std::domain_error("approximant: log log undefined (z <= e)");
  return std::sqrt(lz - 0.5 * std::log(lz));
}

}  // namespace

double approximant(Approximant which, double arg, double tau) {
  switch (which) {
    case Approximant::s_tilde: {
      if (arg <= 0.0 || arg >= 1.0) throw std::domain_error("s_tilde: gamma outside (0,1)");
      return 1.0 / std::sqrt(arg) - 1.5 * std::sqrt(arg);
    }
    case Approximant::x_tilde_plus: {
      if (arg <= 0.0 || arg >= 1.0) throw std::domain_error("x_tilde_plus: nu outside (0,1)");
      return tail_inverse_approx(1.0 / (2.0 * arg * kSqrtPi));
    }
    case Approximant::y_tilde_pm: {
      if (arg <= 0.0 || arg >= 1.0) throw std::domain_error("y_tilde_pm: nu outside (0,1)");
      return tail_inverse_approx(1.0 / (arg * kSqrtPi));
    }
    case Approximant::r_strong_plus: {
      if (arg <= 0.0 || arg >= 1.0 || tau <= 0.0) throw std::domain_error("r_strong_plus: bad args");
      return 1.0 / std::fabs(tau * std::log(arg * 2.0 * kSqrtPi));
    }
    case Approximant::r_strong_pm: {
      if (arg <= 0.0 || arg >= 1.0 || tau <= 0.0) throw std::domain_error("r_strong_pm: bad args");
      return 1.0 / std::fabs(tau * std::log(arg * kSqrtPi));
    }
    case Approximant::r_weak: {
      if (arg <= 0.0 || arg >= 1.0 || tau <= 0.0) throw std::domain_error("r_weak: bad args");
      return 1.0 / (tau * std::log(1.0 / arg));
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace polyphase
