#include <doctest.h>

#include <cmath>

#include "polyphase/angles.hpp"
#include "polyphase/exponents.hpp"
#include "polyphase/specfun.hpp"

using namespace polyphase;

TEST_CASE("external angle closed-form cases") {
  // power-0 Gaussian integral: the tail formula gives exactly 1/2
  CHECK(external_angle(Family::CrossPolytope, 3, 4) == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(external_angle(Family::Simplex, 4, 5) == doctest::Approx(0.5).epsilon(1e-10));
  // alpha(T^0, T^1) = 3/8 via int_0^inf e^{-x^2} erf(x) dx = sqrt(pi)/4
  CHECK(external_angle(Family::Simplex, 0, 2) == doctest::Approx(0.375).epsilon(1e-10));
  for (int l : {1, 3, 7}) {
    const double a = external_angle(Family::Simplex, l, 12);
    CHECK(a > 0.0);
    CHECK(a < 1.0);
  }
}

TEST_CASE("exact external angle matches small-case geometry") {
  // facet of the tetrahedron: the normal cone is a ray, angle 1/2
  CHECK(external_angle_exact(Family::Simplex, 2, 4) == doctest::Approx(0.5).epsilon(1e-10));
  // vertex of the equilateral triangle: wedge of angle 2*pi/3, fraction 1/3
  CHECK(external_angle_exact(Family::Simplex, 0, 3) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-9));
  // the whole polytope is its own face with trivial normal cone
  CHECK(external_angle_exact(Family::Simplex, 4, 5) == doctest::Approx(1.0).epsilon(1e-10));
  // cross-polytope angles are exact as printed
  CHECK(external_angle_exact(Family::CrossPolytope, 2, 7) ==
        doctest::Approx(external_angle(Family::CrossPolytope, 2, 7)).epsilon(1e-12));
}

TEST_CASE("internal angle trivial cases via the oracle") {
  for (int l : {1, 2, 3})
    CHECK(internal_angle(l - 1, l, AngleMethod::Oracle) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(internal_angle(0, 1, AngleMethod::Oracle) == doctest::Approx(0.5).epsilon(1e-9));
  // equilateral triangle at a vertex: 1/6; regular tetrahedron at a vertex:
  // the classical solid angle acos(23/27)/(4 pi)
  CHECK(internal_angle(0, 2, AngleMethod::Oracle) ==
        doctest::Approx(1.0 / 6.0).epsilon(1e-9));
  CHECK(internal_angle(0, 3, AngleMethod::Oracle) ==
        doctest::Approx(std::acos(23.0 / 27.0) / (4.0 * kPi)).epsilon(1e-8));
}

TEST_CASE("saddlepoint vs oracle at moderate size") {
  const double oracle = internal_angle(3, 15, AngleMethod::Oracle);
  const double saddle = internal_angle(3, 15, AngleMethod::Saddlepoint);
  CHECK(std::fabs(saddle - oracle) / oracle < 0.10);
}

TEST_CASE("angles lie in (0,1)") {
  for (int k = 0; k < 4; ++k)
    for (int l = k + 1; l < 9; ++l) {
      const double b = internal_angle(k, l, AngleMethod::Oracle);
      CHECK(b > 0.0);
      CHECK(b < 1.0);
    }
}

TEST_CASE("external-angle exponential upper bounds on a grid") {
  const std::pair<int, int> cases[] = {{51, 100}, {10, 30}, {20, 50}, {5, 20}, {30, 60},
                                       {40, 90},  {15, 40}, {8, 25},  {25, 80}, {12, 28}};
  for (auto [l, N] : cases) {
    const double nu = static_cast<double>(l) / N;
    CHECK(external_angle(Family::Simplex, l, N) <=
          std::sqrt(N + 1.0) * std::exp(-N * psi_ext(Family::Simplex, nu)));
    const double nu_hat = nu + 0.5 / N;
    CHECK(external_angle(Family::CrossPolytope, l, N) <=
          1.25 * std::sqrt(l + 1.0) * std::exp(-N * psi_ext(Family::CrossPolytope, nu_hat)));
  }
}

TEST_CASE("internal-angle exponential upper bound on a grid") {
  const std::tuple<int, int, int> cases[] = {{1, 5, 20}, {2, 8, 30},  {3, 12, 40}, {0, 4, 16},
                                             {2, 10, 25}, {4, 14, 50}, {1, 7, 18},  {3, 9, 22},
                                             {5, 17, 60}, {2, 6, 15}};
  for (auto [k, l, N] : cases) {
    const double nu_t = (l + 2.0) / N;
    const double g_t = (k + 1.0) / (l + 2.0);
    const double bound = 2.0 / kPi * std::pow(N + 3.0, 2.5) * std::exp(-N * psi_int({nu_t, g_t}));
    CHECK(internal_angle(k, l, AngleMethod::Oracle) <= bound);
  }
}

TEST_CASE("saddlepoint value against the Fenchel-Legendre construction") {
  // psi_gamma(z_gamma) = -(1-gamma) xi_gamma(y_gamma) with
  // xi(y) = (1-g)/g y^2/2 + Lambda*(y), Lambda*(y) = s y - Lambda(s) at the
  // dual pairing (1-g)/g y = -s
  for (double g : {0.2, 0.375, 0.6}) {
    const GammaDual d = solve_s_gamma(g);
    const double z = solve_saddlepoint_z(g).z_gamma;
    const double psi = 0.5 * z * z + (1.0 - g) * log_two_phi(z);
    const double s_cgf = -d.s_gamma;
    const double lambda = 0.5 * s_cgf * s_cgf + log_two_phi(s_cgf);
    const double lstar = s_cgf * d.y_gamma - lambda;
    const double xi = (1.0 - g) / g * 0.5 * d.y_gamma * d.y_gamma + lstar;
    CHECK(psi == doctest::Approx(-(1.0 - g) * xi).epsilon(1e-8));
  }
}

TEST_CASE("face counts") {
  CHECK(face_count(Family::Simplex, 1, 4).exact == 6);
  CHECK(face_count(Family::CrossPolytope, 0, 7).exact == 14);
  CHECK(face_count(Family::CrossPolytope, 2, 4).exact == 32);
  // log companion agrees with the exact value
  const FaceCount fc = face_count(Family::Simplex, 10, 200);
  CHECK(fc.log_value ==
        doctest::Approx(std::log(fc.exact.convert_to<double>())).epsilon(1e-10));
  // big-integer range well past double overflow
  const FaceCount big = face_count(Family::CrossPolytope, 400, 1200);
  CHECK(big.log_value > 709.0);
  CHECK(big.exact > 0);
}

TEST_CASE("discrepancy edge cases and monotone trend") {
  CHECK(discrepancy_delta(Family::Simplex, 0, 4, 5) == doctest::Approx(0.0));
  // more dimensions retained => fewer faces lost
  CHECK(discrepancy_delta(Family::Simplex, 0, 3, 8) >
        discrepancy_delta(Family::Simplex, 0, 5, 8));
  // triangle to a line: a segment keeps 2 of 3 vertices
  CHECK(discrepancy_delta(Family::Simplex, 0, 1, 3) == doctest::Approx(1.0).epsilon(1e-9));
  // tetrahedron to a line: 2 of 4 vertices survive
  CHECK(discrepancy_delta(Family::Simplex, 0, 1, 4) == doctest::Approx(2.0).epsilon(1e-9));
}
