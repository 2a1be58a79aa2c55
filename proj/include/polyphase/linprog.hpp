#ifndef POLYPHASE_LINPROG_HPP
#define POLYPHASE_LINPROG_HPP

// Dense two-phase revised simplex for standard-form programs
//   min c'x  s.t.  Ax = b, x >= 0,
// plus the l1-minimization reformulations used by the face-survival
// experiments.  Vertex solutions and reduced-cost uniqueness certificates are
// the point; no sparsity, presolve, or warm starts.

#include <Eigen/Dense>
#include <vector>

namespace polyphase {

struct LPInstance {
  Eigen::VectorXd costs;             // length M
  Eigen::MatrixXd constraint_matrix; // R x M, R <= M
  Eigen::VectorXd rhs;               // length R
};

enum class LPStatus { Optimal, Infeasible, Unbounded };
enum class Uniqueness { CertifiedUnique, PossiblyNonUnique };

struct LPSolution {
  LPStatus status = LPStatus::Optimal;
  Eigen::VectorXd x;
  double objective = 0.0;
  std::vector<int> basis;
  Uniqueness unique = Uniqueness::PossiblyNonUnique;
};

inline constexpr double kFeasTol = 1e-9;
inline constexpr double kOptTol = 1e-9;
inline constexpr double kUniqTol = 1e-8;

LPSolution lp_solve(const LPInstance& inst);

// min ||x||_1 s.t. y = Ax, via the split x = u - v, u,v >= 0.
LPSolution solve_P1(const Eigen::MatrixXd& A, const Eigen::VectorXd& y);

// min 1'x s.t. y = Ax, x >= 0.
LPSolution solve_LP_nonneg(const Eigen::MatrixXd& A, const Eigen::VectorXd& y);

}  // namespace polyphase

#endif
