#ifndef POLYPHASE_EXPERIMENTS_HPP
#define POLYPHASE_EXPERIMENTS_HPP

// Seeded Monte Carlo harness: random ensembles, l1-minimization face-survival
// trials, success grids over (n,k) cells, neighborliness certification, the
// error-correction round trip, and the small-size expected-face-count oracle.

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polyphase/duals.hpp"
#include "polyphase/linprog.hpp"

namespace polyphase {

// iid N(0, 1/n) entries, row-major fill order; identical seed, identical matrix.
Eigen::MatrixXd gaussian_matrix(int n, int N, uint64_t seed);

// QR of a seeded Gaussian square matrix, R-diagonal signs normalized to +.
Eigen::MatrixXd haar_orthogonal(int N, uint64_t seed);

// k-sparse vector, support uniform among k-subsets, nonzeros +-1 (signed) or +1.
Eigen::VectorXd sparse_vector(int N, int k, bool signed_entries, uint64_t seed);

enum class TrialOutcome { Success, Ambiguous, Failure, SolverError };

// Draws x0 (nonnegative for Simplex via (LP), signed for CrossPolytope via
// (P_1)), forms y = A x0, solves, and compares.  Success requires equality
// within tol and a CertifiedUnique certificate; an equal but possibly
// non-unique solution is Ambiguous.
TrialOutcome face_survival_trial(Family family, const Eigen::MatrixXd& A, int k,
                                 uint64_t seed, double success_tol = 1e-6);

struct KRuleExplicit { std::vector<int> ks; };
struct KRuleAroundThreshold {};  // eleven values centered on n/(2 log(N/n))
using KRule = std::variant<KRuleExplicit, KRuleAroundThreshold>;

struct ExperimentConfig {
  Family family = Family::Simplex;
  int N = 0;
  std::vector<int> n_list;
  KRule k_rule = KRuleExplicit{};
  int trials_per_cell = 1;
  uint64_t master_seed = 0;
  double success_tol = 1e-6;
};

struct GridCell {
  int n = 0;
  int k = 0;
  int trials = 0;
  int successes = 0;
  int ambiguous = 0;
  int errors = 0;
};

struct GridResult {
  ExperimentConfig config;
  std::vector<GridCell> cells;
};

GridResult success_grid(const ExperimentConfig& cfg);

struct Certified { int k; };
struct FailedAtFace { std::string description; };
struct SampledPass { double rate; };
using NeighborlinessResult = std::variant<Certified, FailedAtFace, SampledPass>;

struct Exhaustive {};
struct Sampled { int trials; uint64_t seed; };
using NeighborlinessMode = std::variant<Exhaustive, Sampled>;

// Checks that every j-face, j <= k, of the projected polytope survives, via
// the barycenter LP criterion.  Exhaustive mode enumerates supports (and sign
// patterns for the cross-polytope) within a 1e5 face work budget.
NeighborlinessResult neighborliness_check(const Eigen::MatrixXd& A, int k,
                                          const NeighborlinessMode& mode,
                                          Family family);

enum class ErrorModel { RandomSigned, AdversarialFixedSupport };

struct EccConfig {
  int N = 0;
  int n = 0;  // checksum rows
  int k = 0;  // error count
  ErrorModel error_model = ErrorModel::RandomSigned;
  int trials = 1;
  uint64_t master_seed = 0;
};

struct EccTrialResult {
  bool exact = false;
  bool solver_error = false;
};

std::vector<EccTrialResult> ecc_roundtrip(const EccConfig& cfg);

struct McFaceCount {
  double mean;
  double stderr_;
};

// Monte Carlo estimate of E f_k(AQ) by exhaustive face-survival over all
// k-faces per random A.  Small sizes only.
McFaceCount mc_face_count(Family family, int k, int n, int N, int trials,
                          uint64_t seed);

}  // namespace polyphase

#endif
