#include "polyphase/angles.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <mutex>
#include <stdexcept>

#include "polyphase/quadrature.hpp"
#include "polyphase/specfun.hpp"

namespace polyphase {

const GaussLegendreRule& gauss_legendre(int n) {
  static std::map<int, GaussLegendreRule> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Chebyshev-like initial guess, Newton on P_n
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return cache.emplace(n, std::move(rule)).first->second;
}

double integrate_panels(const std::function<double(double)>& f, double a, double b,
                        int panels, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const double h = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * h;
    const double mid = lo + 0.5 * h;
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += rule.weights[i] * f(mid + 0.5 * h * rule.nodes[i]);
    total += 0.5 * h * s;
  }
  return total;
}

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_floor, int initial_panels,
                          int order, int max_doublings) {
  int panels = initial_panels;
  double prev = integrate_panels(f, a, b, panels, order);
  for (int d = 0; d < max_doublings; ++d) {
    panels *= 2;
    const double cur = integrate_panels(f, a, b, panels, order);
    if (std::fabs(cur - prev) <= rel_tol * std::fabs(cur) + abs_floor) return cur;
    prev = cur;
  }
  throw std::runtime_error("integrate_adaptive: no convergence");
}

namespace {

double ext_integrand(Family family, int l, int N, double x) {
  const int pow = N - l - 1;
  const double cdf = family == Family::Simplex
                         ? gauss_cdf(GaussKind::Q_centered, x)
                         : (x >= 0.0 ? gauss_cdf(GaussKind::G_halfnormal, x) : 0.0);
  if (cdf <= 0.0 && pow > 0) return 0.0;
  return std::exp(-(l + 1.0) * x * x + pow * (pow > 0 ? std::log(cdf) : 0.0));
}

void check_ext_args(int l, int N) {
  if (!(l >= 0 && l < N)) throw std::domain_error("external_angle: need 0 <= l < N");
}

double ext_upper_cut(int l) { return std::sqrt(45.0 / (l + 1.0)) + 0.5; }

}  // namespace

double external_angle(Family family, int l, int N) {
  check_ext_args(l, N);
  auto f = [&](double x) { return ext_integrand(family, l, N, x); };
  const double X = ext_upper_cut(l);
  const double v = integrate_adaptive(f, 0.0, X, 1e-10);
  return std::sqrt((l + 1.0) / kPi) * v;
}

double external_angle_exact(Family family, int l, int N) {
  check_ext_args(l, N);
  if (family == Family::CrossPolytope) return external_angle(family, l, N);
  auto f = [&](double x) { return ext_integrand(family, l, N, x); };
  const double X = ext_upper_cut(l);
  // Q(x)^{N-l-1} decays like e^{-x^2 (N-l-1)}-ish on the left; cut where the
  // whole integrand is below 1e-18.
  const double Xneg = -std::sqrt(45.0 / std::max(1, N - l)) - 3.0;
  const double v = integrate_adaptive(f, Xneg, X, 1e-10);
  return std::sqrt((l + 1.0) / kPi) * v;
}

namespace {

// E exp(i w W) for W half-normal, by quadrature of the defining integral.
std::complex<double> half_normal_cf(double w, int order) {
  const GaussLegendreRule& rule = gauss_legendre(order);
  const double a = 0.0, b = 8.75;
  std::complex<double> s{0.0, 0.0};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < order; ++i) {
    const double v = mid + half * rule.nodes[i];
    const double env = std::exp(-0.5 * v * v);
    s += rule.weights[i] * env * std::complex<double>(std::cos(w * v), std::sin(w * v));
  }
  s *= half * std::sqrt(2.0 / kPi);
  return s;
}

double internal_angle_oracle(int k, int l) {
  const int m = l - k;
  // truncate where the e^{-(k+1)w^2/2} envelope of the integrand is < 1e-19
  const double L = std::sqrt(90.0 / (k + 1.0)) + 1.0;
  const int inner_order = 220;
  std::complex<double> total{0.0, 0.0};
  int panels = 24, order = 48;
  std::complex<double> prev{0.0, 0.0};
  for (int doubling = 0; doubling < 8; ++doubling) {
    const GaussLegendreRule& rule = gauss_legendre(order);
    total = {0.0, 0.0};
    const double h = 2.0 * L / panels;
    for (int p = 0; p < panels; ++p) {
      const double lo = -L + p * h;
      const double mid = lo + 0.5 * h;
      for (int i = 0; i < order; ++i) {
        const double w = mid + 0.5 * h * rule.nodes[i];
        // the m half-normal transforms carry their own Gaussian decay, so the
        // explicit weight is the N(0,k+1) factor only
        const std::complex<double> cf = half_normal_cf(w, inner_order);
        total += rule.weights[i] * 0.5 * h *
                 std::exp(-0.5 * (k + 1.0) * w * w) * std::pow(cf, m);
      }
    }
    if (doubling > 0 && std::abs(total - prev) <= 1e-11 * std::abs(total) + 1e-18) break;
    prev = total;
    panels *= 2;
  }
  if (std::fabs(total.imag()) >= 1e-10)
    throw std::runtime_error("internal_angle oracle: imaginary part did not vanish");
  return std::sqrt((l + 1.0) / (2.0 * kPi)) * std::ldexp(1.0, -m) * total.real();
}

double internal_angle_saddlepoint(int k, int l) {
  const double gamma = (k + 1.0) / (l + 1.0);
  const double z = solve_saddlepoint_z(gamma).z_gamma;
  const double psi = 0.5 * z * z + (1.0 - gamma) * log_two_phi(z);
  const double psipp = 1.0 - z * z * gamma / (1.0 - gamma);
  return std::sqrt(l + 1.0) * std::ldexp(1.0, -(l - k)) *
         std::sqrt(1.0 / ((l + 1.0) * psipp)) * std::exp((l + 1.0) * psi);
}

}  // namespace

double internal_angle(int k, int l, AngleMethod method) {
  if (!(k >= 0 && k < l)) throw std::domain_error("internal_angle: need 0 <= k < l");
  switch (method) {
    case AngleMethod::Oracle:
      return internal_angle_oracle(k, l);
    case AngleMethod::Saddlepoint:
      return internal_angle_saddlepoint(k, l);
    case AngleMethod::Quadrature:
      return internal_angle_oracle(k, l);
  }
  throw std::domain_error("internal_angle: bad method");
}

FaceCount face_count(Family family, int k, int N) {
  if (!(k >= 0 && k <= N - 1)) throw std::domain_error("face_count: need 0 <= k <= N-1");
  boost::multiprecision::cpp_int c = 1;
  for (int i = 0; i < k + 1; ++i) {
    c *= N - i;
    c /= i + 1;
  }
  double logv = std::lgamma(N + 1.0) - std::lgamma(k + 2.0) - std::lgamma(N - k + 0.0);
  if (family == Family::CrossPolytope) {
    c <<= k + 1;
    logv += (k + 1) * kLog2;
  }
  return FaceCount{c, logv};
}

double discrepancy_delta(Family family, int k, int n, int N) {
  if (!(k >= 0 && k < n && n < N)) throw std::domain_error("discrepancy_delta: need k < n < N");
  double delta = 0.0;
  for (int l = n + 1; l <= N - 1; l += 2) {
    // C(N,k+1) * C(N-k-1, l-k), via lgamma
    const double logc = std::lgamma(N + 1.0) - std::lgamma(k + 2.0) - std::lgamma(N - k + 0.0) +
                        std::lgamma(N - k + 0.0) - std::lgamma(l - k + 1.0) -
                        std::lgamma(N - l + 0.0);
    double term = 2.0 * std::exp(logc) * internal_angle(k, l, AngleMethod::Oracle) *
                  external_angle_exact(family, l, N);
    if (family == Family::CrossPolytope) term *= std::ldexp(1.0, l);
    delta += term;
  }
  return delta;
}

}  // namespace polyphase
