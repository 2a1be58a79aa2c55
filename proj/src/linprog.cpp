#include "polyphase/linprog.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polyphase {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr int kStallLimit = 500;  // Bland's rule beyond this many stalled pivots

// Working tableau state for the revised simplex with an explicit basis
// inverse.  Artificial columns occupy indices M..M+R-1 and never re-enter
// once phase 1 ends.
struct Simplex {
  int R, M;
  Eigen::MatrixXd A;       // R x (M+R), structurals then artificials
  Eigen::VectorXd b;       // >= 0 after row normalization
  Eigen::VectorXd c;       // current phase costs, length M+R
  Eigen::MatrixXd Binv;    // R x R
  Eigen::VectorXd xB;      // basic values
  std::vector<int> basis;  // column index per row
  long pivots_since_factor = 0;

  void refactorize() {
    Eigen::MatrixXd B(R, R);
    for (int i = 0; i < R; ++i) B.col(i) = A.col(basis[i]);
    Binv = B.partialPivLu().inverse();
    xB = Binv * b;
    pivots_since_factor = 0;
  }

  double objective() const {
    double v = 0.0;
    for (int i = 0; i < R; ++i) v += c[basis[i]] * xB[i];
    return v;
  }

  Eigen::VectorXd multipliers() const {
    Eigen::VectorXd cB(R);
    for (int i = 0; i < R; ++i) cB[i] = c[basis[i]];
    return Binv.transpose() * cB;
  }

  // returns false on iteration-cap failure
  bool iterate(int max_entering, long iter_cap) {
    long stalled = 0;
    double last_obj = objective();
    for (long it = 0; it < iter_cap; ++it) {
      const Eigen::VectorXd y = multipliers();
      int enter = -1;
      double best = -kOptTol;
      const bool bland = stalled > kStallLimit;
      for (int j = 0; j < max_entering; ++j) {
        const double d = c[j] - y.dot(A.col(j));
        if (d < -kOptTol) {
          if (bland) { enter = j; break; }
          if (d < best) { best = d; enter = j; }
        }
      }
      if (enter < 0) return true;  // optimal for this phase
      const Eigen::VectorXd dir = Binv * A.col(enter);
      int leave = -1;
      double best_ratio = 0.0;
      for (int i = 0; i < R; ++i) {
        if (dir[i] > kPivotTol) {
          const double ratio = xB[i] / dir[i];
          if (leave < 0 || ratio < best_ratio - 1e-12 ||
              (ratio < best_ratio + 1e-12 && basis[i] < basis[leave]))
            { leave = i; best_ratio = ratio; }
        }
      }
      if (leave < 0) return true;  // unbounded direction; caller inspects costs
      // eta update of the explicit inverse
      const double piv = dir[leave];
      Eigen::VectorXd eta = -dir / piv;
      eta[leave] = 1.0 / piv;
      const Eigen::RowVectorXd pivot_row = Binv.row(leave);
      for (int i = 0; i < R; ++i)
        if (i != leave) Binv.row(i) += eta[i] * pivot_row;
      Binv.row(leave) *= eta[leave];
      basis[leave] = enter;
      xB = Binv * b;
      for (int i = 0; i < R; ++i) if (xB[i] < 0.0 && xB[i] > -kFeasTol) xB[i] = 0.0;
      if (++pivots_since_factor >= 200) refactorize();
      const double obj = objective();
      if (obj < last_obj - 1e-12) { stalled = 0; last_obj = obj; }
      else ++stalled;
    }
    return false;
  }
};

}  // namespace

LPSolution lp_solve(const LPInstance& inst) {
  const int R = static_cast<int>(inst.constraint_matrix.rows());
  const int M = static_cast<int>(inst.constraint_matrix.cols());
  if (R > M || inst.costs.size() != M || inst.rhs.size() != R)
    throw std::domain_error("lp_solve: inconsistent instance shape");
  if (!inst.constraint_matrix.allFinite() || !inst.costs.allFinite() || !inst.rhs.allFinite())
    throw std::domain_error("lp_solve: non-finite entries");

  Simplex s;
  s.R = R;
  s.M = M;
  s.A.resize(R, M + R);
  s.A.leftCols(M) = inst.constraint_matrix;
  s.A.rightCols(R).setIdentity();
  s.b = inst.rhs;
  // rows scaled to unit inf-norm, so the fixed tolerances are meaningful
  for (int i = 0; i < R; ++i) {
    const double scale = s.A.row(i).head(M).cwiseAbs().maxCoeff();
    if (scale > 0.0) { s.A.row(i).head(M) /= scale; s.b[i] /= scale; }
    if (s.b[i] < 0.0) { s.A.row(i).head(M) = -s.A.row(i).head(M); s.b[i] = -s.b[i]; }
  }
  const long iter_cap = 2000 + 60L * (R + M);

  // phase 1: drive artificials to zero
  s.c = Eigen::VectorXd::Zero(M + R);
  s.c.tail(R).setOnes();
  s.basis.resize(R);
  for (int i = 0; i < R; ++i) s.basis[i] = M + i;
  s.refactorize();
  if (!s.iterate(M + R, iter_cap)) {
    std::ostringstream os;
    os << "lp_solve: phase-1 iteration cap; basis:";
    for (int j : s.basis) os << ' ' << j;
    throw std::runtime_error(os.str());
  }
  LPSolution sol;
  if (s.objective() > kFeasTol) {
    sol.status = LPStatus::Infeasible;
    return sol;
  }
  // pivot remaining zero-level artificials out where a structural pivot exists
  for (int i = 0; i < R; ++i) {
    if (s.basis[i] < M) continue;
    const Eigen::RowVectorXd row = s.Binv.row(i) * s.A.leftCols(M);
    int enter = -1;
    for (int j = 0; j < M; ++j)
      if (std::fabs(row[j]) > 1e-7) { enter = j; break; }
    if (enter < 0) continue;  // numerically redundant row; artificial stays at 0
    const Eigen::VectorXd dir = s.Binv * s.A.col(enter);
    const double piv = dir[i];
    Eigen::VectorXd eta = -dir / piv;
    eta[i] = 1.0 / piv;
    const Eigen::RowVectorXd pivot_row = s.Binv.row(i);
    for (int r = 0; r < R; ++r)
      if (r != i) s.Binv.row(r) += eta[r] * pivot_row;
    s.Binv.row(i) *= eta[i];
    s.basis[i] = enter;
    s.xB = s.Binv * s.b;
  }

  // phase 2 over the structural columns only
  s.c.setZero();
  s.c.head(M) = inst.costs;
  if (!s.iterate(M, iter_cap)) {
    std::ostringstream os;
    os << "lp_solve: phase-2 iteration cap; basis:";
    for (int j : s.basis) os << ' ' << j;
    throw std::runtime_error(os.str());
  }

  // distinguish optimal from unbounded: an entering column with negative
  // reduced cost and no blocking row means unbounded
  {
    const Eigen::VectorXd y = s.multipliers();
    for (int j = 0; j < M; ++j) {
      const double d = s.c[j] - y.dot(s.A.col(j));
      if (d < -kOptTol) {
        const Eigen::VectorXd dir = s.Binv * s.A.col(j);
        if ((dir.array() <= kPivotTol).all()) {
          sol.status = LPStatus::Unbounded;
          return sol;
        }
      }
    }
  }

  sol.status = LPStatus::Optimal;
  sol.x = Eigen::VectorXd::Zero(M);
  for (int i = 0; i < R; ++i)
    if (s.basis[i] < M) sol.x[s.basis[i]] = s.xB[i];
  sol.objective = inst.costs.dot(sol.x);
  sol.basis = s.basis;

  // certificate: strictly positive reduced costs on every nonbasic structural
  const Eigen::VectorXd y = s.multipliers();
  std::vector<char> in_basis(M, 0);
  for (int j : s.basis)
    if (j < M) in_basis[j] = 1;
  bool unique = true;
  for (int j = 0; j < M && unique; ++j) {
    if (in_basis[j]) continue;
    if (s.c[j] - y.dot(s.A.col(j)) <= kUniqTol) unique = false;
  }
  sol.unique = unique ? Uniqueness::CertifiedUnique : Uniqueness::PossiblyNonUnique;
  return sol;
}

LPSolution solve_P1(const Eigen::MatrixXd& A, const Eigen::VectorXd& y) {
  const int n = static_cast<int>(A.rows());
  const int N = static_cast<int>(A.cols());
  if (n > N) throw std::domain_error("solve_P1: need n <= N");
  LPInstance inst;
  inst.constraint_matrix.resize(n, 2 * N);
  inst.constraint_matrix.leftCols(N) = A;
  inst.constraint_matrix.rightCols(N) = -A;
  inst.costs = Eigen::VectorXd::Ones(2 * N);
  inst.rhs = y;
  LPSolution split = lp_solve(inst);
  if (split.status != LPStatus::Optimal) return split;
  LPSolution sol = split;
  sol.x = split.x.head(N) - split.x.tail(N);
  sol.objective = split.objective;  // = ||x||_1 at a vertex (u_i v_i never both basic)
  return sol;
}

LPSolution solve_LP_nonneg(const Eigen::MatrixXd& A, const Eigen::VectorXd& y) {
  if (A.rows() > A.cols()) throw std::domain_error("solve_LP_nonneg: need n <= N");
  LPInstance inst;
  inst.constraint_matrix = A;
  inst.costs = Eigen::VectorXd::Ones(A.cols());
  inst.rhs = y;
  return lp_solve(inst);
}

}  // namespace polyphase
