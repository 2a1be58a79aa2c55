#include <doctest.h>

#include <cmath>
#include <vector>

#include "polyphase/specfun.hpp"

using namespace polyphase;

namespace {

// series Phi(x) = 1/2 + phi(x) (x + x^3/3 + x^5/(3*5) + ...), an independent
// route to the CDF for the cross-check grid
double phi_series(double x) {
  long double term = x, sum = x;
  for (int k = 1; k < 400; ++k) {
    term *= x * x / (2.0L * k + 1.0L);
    sum += term;
    if (std::fabs(static_cast<double>(term)) < 1e-20) break;
  }
  const long double dens = std::exp(-0.5L * x * x) / std::sqrt(2.0L * 3.14159265358979323846L);
  return static_cast<double>(0.5L + dens * sum);
}

// R(s) by direct quadrature of the tail integral (Simpson), independent of
// the erfcx path
double mills_R_quadrature(double s) {
  const double hi = s + 40.0;
  const int n = 200000;
  const double h = (hi - s) / n;
  double acc = std::exp(-0.5 * (s * s - s * s)) + std::exp(-0.5 * (hi * hi - s * s));
  for (int i = 1; i < n; ++i) {
    const double y = s + i * h;
    acc += (i % 2 ? 4.0 : 2.0) * std::exp(-0.5 * (y * y - s * s));
  }
  return s * acc * h / 3.0;
}

}  // namespace

TEST_CASE("entropy endpoints and reference values") {
  CHECK(entropy(0.0) == 0.0);
  CHECK(entropy(1.0) == 0.0);
  CHECK(entropy(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  // frozen high-precision evaluation of the defining formula
  CHECK(entropy(0.1) == doctest::Approx(0.32508297339144824).epsilon(1e-14));
  CHECK_THROWS_AS(entropy(-0.1), std::domain_error);
  CHECK_THROWS_AS(entropy(1.1), std::domain_error);
}

TEST_CASE("entropy is concave and symmetric") {
  for (int i = 1; i < 50; ++i) {
    const double p = i / 50.0;
    CHECK(entropy(p) == doctest::Approx(entropy(1.0 - p)).epsilon(1e-13));
    if (i > 1 && i < 49) {
      const double h = 1.0 / 50.0;
      CHECK(entropy(p - h) + entropy(p + h) <= 2.0 * entropy(p) + 1e-12);
    }
  }
}

TEST_CASE("gauss_cdf basics") {
  CHECK(gauss_cdf(GaussKind::Q_centered, 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(gauss_cdf(GaussKind::G_halfnormal, 0.0) == 0.0);
  // frozen: (1+erf(1))/2
  CHECK(gauss_cdf(GaussKind::Q_centered, 1.0) ==
        doctest::Approx(0.92135039647485743).epsilon(1e-14));
  CHECK_THROWS_AS(gauss_cdf(GaussKind::G_halfnormal, -0.5), std::domain_error);
  CHECK(gauss_cdf(GaussKind::Q_centered, -40.0) == doctest::Approx(0.0));
  CHECK(gauss_cdf(GaussKind::Q_centered, 40.0) == doctest::Approx(1.0));
}

TEST_CASE("Phi agrees with an independent series reference on [-8,8]") {
  for (int i = -80; i <= 80; ++i) {
    const double x = i / 10.0;
    CHECK(std::fabs(gauss_cdf(GaussKind::Phi_standard, x) - phi_series(x)) < 1e-13);
  }
}

TEST_CASE("gauss_cdf monotone") {
  double prev = -1.0;
  for (int i = -60; i <= 60; ++i) {
    const double v = gauss_cdf(GaussKind::Q_centered, i / 10.0);
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("mills_R values") {
  CHECK(mills_R(0.0) == 0.0);
  CHECK_THROWS_AS(mills_R(-1.0), std::domain_error);
  // frozen from the truncated Laplace series, cross-checked by quadrature
  CHECK(mills_R(100.0) == doctest::Approx(0.99990002998501049).epsilon(1e-12));
  CHECK(mills_R(6.0) == doctest::Approx(0.97426596538120477).epsilon(1e-12));
  // quadrature cross-check at moderate s
  for (double s : {0.5, 1.0, 2.0, 4.0})
    CHECK(mills_R(s) == doctest::Approx(mills_R_quadrature(s)).epsilon(1e-9));
  // no overflow far out
  CHECK(mills_R(1e8) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("mills_R strictly increasing toward 1") {
  double prev = 0.0;
  for (double s = 0.1; s < 30.0; s += 0.1) {
    const double v = mills_R(s);
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
}

TEST_CASE("Mills bracketing for s > sqrt(30)") {
  for (double s : {5.5, 6.0, 7.0, 10.0, 20.0, 50.0}) {
    const double s2 = 1.0 / (s * s), s4 = s2 * s2;
    CHECK(mills_R(s) > 1.0 - s2 + 2.5 * s4);
    CHECK(mills_R(s) < 1.0 - s2 + 3.0 * s4);
  }
}

TEST_CASE("asymptotic series truncation bound for s >= 10") {
  for (double s : {10.0, 12.0, 15.0, 20.0, 40.0, 100.0}) {
    const double s2 = 1.0 / (s * s);
    const double approx = 1.0 - s2 + 3.0 * s2 * s2 - 15.0 * s2 * s2 * s2;
    CHECK(std::fabs(mills_R(s) - approx) <= 105.0 * std::pow(s, -8.0));
  }
}

TEST_CASE("approximants") {
  CHECK(approximant(Approximant::s_tilde, 0.01) == doctest::Approx(9.85).epsilon(1e-14));
  CHECK(approximant(Approximant::r_weak, std::exp(-1.0), 2.0) ==
        doctest::Approx(0.5).epsilon(1e-14));
  const double nu = 1e-4;
  const double z = 1.0 / (2.0 * nu * kSqrtPi);
  const double expect = std::sqrt(std::log(z) - 0.5 * std::log(std::log(z)));
  CHECK(approximant(Approximant::x_tilde_plus, nu) == doctest::Approx(expect).epsilon(1e-14));
  const double zpm = 1.0 / (nu * kSqrtPi);
  CHECK(approximant(Approximant::y_tilde_pm, nu) ==
        doctest::Approx(std::sqrt(std::log(zpm) - 0.5 * std::log(std::log(zpm)))).epsilon(1e-14));
  // log log undefined for z <= e: nu large enough that z < e
  CHECK_THROWS_AS(approximant(Approximant::x_tilde_plus, 0.2), std::domain_error);
  CHECK(approximant(Approximant::r_strong_plus, 0.001, 2.0) ==
        doctest::Approx(1.0 / std::fabs(2.0 * std::log(0.001 * 2.0 * kSqrtPi))).epsilon(1e-14));
}
