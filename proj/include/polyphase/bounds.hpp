#ifndef POLYPHASE_BOUNDS_HPP
#define POLYPHASE_BOUNDS_HPP

// Explicit finite-N bounds on the face-count discrepancy and the
// Rudelson-Vershynin comparison bound, plus their level curves.

#include <vector>

#include "polyphase/thresholds.hpp"

namespace polyphase {

struct TripleKNN {
  int k;  // >= 1
  int n;  // > k
  int N;  // > n
};

struct PerturbedVars {
  double nu_hat;       // nu + 1/(2N)
  double nu_tilde;     // (l+2)/N
  double gamma_tilde;  // (k+1)/(l+2)
};

PerturbedVars perturbed_vars(int k, int l, int N);

// exp(N * E) with E the max over admissible l of the per-l exponent; both the
// linear value (may be 0/inf in double range) and N*E + log(prefactor) are
// reported since exp(N E) under/overflows routinely.
struct BoundResult {
  double value;
  double log_value;
};

// Upper bound on f_k(Q) - E f_k(AQ); prefactor (N+3)^5.
BoundResult strong_bound(Family family, const TripleKNN& t);

// B with E f_k(AQ)/f_k(Q) >= 1 - B; prefactor (N+3)^{11/2}.
BoundResult weak_bound(Family family, const TripleKNN& t);

// Per delta in the grid: the largest rho = k/n (n = ceil(delta N)) whose bound
// does not exceed `level`; empty cells give rho = 0.
PhaseCurve level_curve(Family family, TransitionKind kind, int N, double level,
                       const std::vector<double>& delta_grid);

// 3.5 exp(-[sqrt(n)-sqrt(m)]^2/18), m = c1 k log(c3 N / k), c1 = 6+4 sqrt(2),
// c3 = e^{3/2}; clamped to the vacuous 3.5 when sqrt(n) <= sqrt(m).  With the
// o(1) term set to zero this is a lower bound on the published bound.
double rv_bound(int k, int n, int N);

}  // namespace polyphase

#endif
