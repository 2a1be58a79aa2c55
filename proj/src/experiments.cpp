#include "polyphase/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "polyphase/rng.hpp"

namespace polyphase {

namespace {

// purpose tags for per-trial stream derivation
enum : uint64_t { kTagMatrix = 1, kTagVector = 2, kTagMessage = 3, kTagError = 4 };

template <typename Fn>
void parallel_trials(int count, Fn&& body) {
  const unsigned workers =
      std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                         static_cast<unsigned>(count));
  if (workers <= 1 || count < 4) {
    for (int t = 0; t < count; ++t) body(t);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::future<void>> fs;
  for (unsigned w = 0; w < workers; ++w)
    fs.push_back(std::async(std::launch::async, [&]() {
      for (int t = next.fetch_add(1); t < count; t = next.fetch_add(1)) body(t);
    }));
  for (auto& f : fs) f.get();
}

}  // namespace

Eigen::MatrixXd gaussian_matrix(int n, int N, uint64_t seed) {
  if (n < 1 || N < 1) throw std::domain_error("gaussian_matrix: need n,N >= 1");
  Rng rng(seed);
  Eigen::MatrixXd A(n, N);
  const double s = 1.0 / std::sqrt(static_cast<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < N; ++j) A(i, j) = s * rng.normal();
  return A;
}

Eigen::MatrixXd haar_orthogonal(int N, uint64_t seed) {
  if (N < 1) throw std::domain_error("haar_orthogonal: need N >= 1");
  Rng rng(seed);
  Eigen::MatrixXd G(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) G(i, j) = rng.normal();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd U = qr.householderQ();
  const Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < N; ++j)
    if (R(j, j) < 0.0) U.col(j) = -U.col(j);
  return U;
}

Eigen::VectorXd sparse_vector(int N, int k, bool signed_entries, uint64_t seed) {
  if (!(k >= 0 && k <= N)) throw std::domain_error("sparse_vector: need 0 <= k <= N");
  Rng rng(seed);
  std::vector<int> idx(N);
  for (int i = 0; i < N; ++i) idx[i] = i;
  // partial Fisher-Yates: first k entries are a uniform k-subset
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.below(N - i));
    std::swap(idx[i], idx[j]);
  }
  Eigen::VectorXd x = Eigen::VectorXd::Zero(N);
  for (int i = 0; i < k; ++i) {
    double v = 1.0;
    if (signed_entries) v = (rng.next_u64() & 1u) ? 1.0 : -1.0;
    x[idx[i]] = v;
  }
  return x;
}

namespace {

TrialOutcome survival_outcome(Family family, const Eigen::MatrixXd& A,
                              const Eigen::VectorXd& x0, double tol) {
  const Eigen::VectorXd y = A * x0;
  LPSolution sol;
  try {
    sol = family == Family::Simplex ? solve_LP_nonneg(A, y) : solve_P1(A, y);
  } catch (const std::exception&) {
    return TrialOutcome::SolverError;
  }
  if (sol.status != LPStatus::Optimal) return TrialOutcome::Failure;
  const double scale = std::max(1.0, x0.lpNorm<Eigen::Infinity>());
  const bool equal = (sol.x - x0).lpNorm<Eigen::Infinity>() <= tol * scale;
  if (!equal) return TrialOutcome::Failure;
  return sol.unique == Uniqueness::CertifiedUnique ? TrialOutcome::Success
                                                   : TrialOutcome::Ambiguous;
}

}  // namespace

TrialOutcome face_survival_trial(Family family, const Eigen::MatrixXd& A, int k,
                                 uint64_t seed, double success_tol) {
  const int N = static_cast<int>(A.cols());
  if (!(k >= 0 && k <= N)) throw std::domain_error("face_survival_trial: bad k");
  const Eigen::VectorXd x0 =
      sparse_vector(N, k, family == Family::CrossPolytope, seed);
  return survival_outcome(family, A, x0, success_tol);
}

namespace {

std::vector<int> ks_for_cell(const ExperimentConfig& cfg, int n) {
  if (const auto* ex = std::get_if<KRuleExplicit>(&cfg.k_rule)) return ex->ks;
  // eleven sparsity values around the weak asymptotic threshold, window
  // shifted to stay inside [0, n]
  const double delta = static_cast<double>(n) / cfg.N;
  const int center = std::max(1, static_cast<int>(std::lround(n / (2.0 * std::log(1.0 / delta)))));
  int lo = std::max(0, center - 5);
  int hi = lo + 10;
  if (hi > n) { hi = n; lo = std::max(0, n - 10); }
  std::vector<int> ks;
  for (int k = lo; k <= hi; ++k) ks.push_back(k);
  return ks;
}

}  // namespace

GridResult success_grid(const ExperimentConfig& cfg) {
  if (cfg.N < 2 || cfg.trials_per_cell < 1 || cfg.n_list.empty())
    throw std::domain_error("success_grid: invalid config");
  for (int n : cfg.n_list)
    if (!(n >= 1 && n < cfg.N)) throw std::domain_error("success_grid: n outside [1,N)");

  GridResult out;
  out.config = cfg;
  for (int n : cfg.n_list)
    for (int k : ks_for_cell(cfg, n))
      out.cells.push_back(GridCell{n, k, cfg.trials_per_cell, 0, 0, 0});

  for (auto& cell : out.cells) {
    std::vector<TrialOutcome> res(cell.trials);
    parallel_trials(cell.trials, [&](int t) {
      const uint64_t mseed = derive_seed(cfg.master_seed, cell.n, cell.k, t, kTagMatrix);
      const uint64_t vseed = derive_seed(cfg.master_seed, cell.n, cell.k, t, kTagVector);
      const Eigen::MatrixXd A = gaussian_matrix(cell.n, cfg.N, mseed);
      res[t] = face_survival_trial(cfg.family, A, cell.k, vseed, cfg.success_tol);
    });
    for (TrialOutcome o : res) {
      switch (o) {
        case TrialOutcome::Success: ++cell.successes; break;
        case TrialOutcome::Ambiguous: ++cell.ambiguous; break;
        case TrialOutcome::SolverError: ++cell.errors; break;
        case TrialOutcome::Failure: break;
      }
    }
  }
  return out;
}

namespace {

// next k-combination of {0..N-1} in lexicographic order; false when done
bool next_combination(std::vector<int>& c, int N) {
  const int k = static_cast<int>(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < N - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string face_description(const std::vector<int>& support, unsigned signs,
                             bool signed_face) {
  std::ostringstream os;
  os << "face {";
  for (size_t i = 0; i < support.size(); ++i) {
    if (i) os << ", ";
    if (signed_face) os << (((signs >> i) & 1u) ? '-' : '+');
    os << support[i];
  }
  os << "}";
  return os.str();
}

double face_work(int N, int j, bool cross) {
  double c = 1.0;
  for (int i = 0; i < j + 1; ++i) c = c * (N - i) / (i + 1);
  return cross ? c * std::ldexp(1.0, j + 1) : c;
}

}  // namespace

NeighborlinessResult neighborliness_check(const Eigen::MatrixXd& A, int k,
                                          const NeighborlinessMode& mode,
                                          Family family) {
  const int N = static_cast<int>(A.cols());
  const bool cross = family == Family::CrossPolytope;
  if (!(k >= 0 && k < N)) throw std::domain_error("neighborliness_check: bad k");

  if (const auto* s = std::get_if<Sampled>(&mode)) {
    int pass = 0;
    std::vector<int> results(s->trials);
    parallel_trials(s->trials, [&](int t) {
      const uint64_t seed = derive_seed(s->seed, k, t, kTagVector);
      results[t] =
          face_survival_trial(family, A, k + 1, seed) == TrialOutcome::Success ? 1 : 0;
    });
    for (int r : results) pass += r;
    return SampledPass{static_cast<double>(pass) / s->trials};
  }

  double work = 0.0;
  for (int j = 0; j <= k; ++j) work += face_work(N, j, cross);
  if (work > 1e5) throw std::domain_error("neighborliness_check: work budget exceeded");

  // j-faces are spanned by j+1 vertices; check barycenters from dimension 0 up
  for (int j = 0; j <= k; ++j) {
    std::vector<int> support(j + 1);
    for (int i = 0; i <= j; ++i) support[i] = i;
    do {
      const unsigned sign_patterns = cross ? (1u << (j + 1)) : 1u;
      for (unsigned signs = 0; signs < sign_patterns; ++signs) {
        Eigen::VectorXd x0 = Eigen::VectorXd::Zero(N);
        for (int i = 0; i <= j; ++i)
          x0[support[i]] = ((signs >> i) & 1u) ? -1.0 : 1.0;
        x0 /= (j + 1.0);  // barycenter of the face
        if (survival_outcome(family, A, x0, 1e-6) != TrialOutcome::Success)
          return FailedAtFace{face_description(support, signs, cross)};
      }
    } while (next_combination(support, N));
  }
  return Certified{k};
}

std::vector<EccTrialResult> ecc_roundtrip(const EccConfig& cfg) {
  if (!(cfg.n < cfg.N && cfg.k < cfg.n && cfg.trials >= 1))
    throw std::domain_error("ecc_roundtrip: invalid config");
  const int m = cfg.N - cfg.n;
  std::vector<EccTrialResult> out(cfg.trials);
  parallel_trials(cfg.trials, [&](int t) {
    const Eigen::MatrixXd U =
        haar_orthogonal(cfg.N, derive_seed(cfg.master_seed, t, kTagMatrix));
    const Eigen::MatrixXd A = U.topRows(cfg.n);
    const Eigen::MatrixXd B = U.bottomRows(m);
    Rng mr(derive_seed(cfg.master_seed, t, kTagMessage));
    Eigen::VectorXd u(m);
    for (int i = 0; i < m; ++i) u[i] = mr.normal();
    Eigen::VectorXd z;
    if (cfg.error_model == ErrorModel::RandomSigned) {
      z = sparse_vector(cfg.N, cfg.k, true, derive_seed(cfg.master_seed, t, kTagError));
    } else {
      z = Eigen::VectorXd::Zero(cfg.N);
      Rng er(derive_seed(cfg.master_seed, t, kTagError));
      for (int i = 0; i < cfg.k; ++i) z[i] = (er.next_u64() & 1u) ? 1.0 : -1.0;
    }
    const Eigen::VectorXd w = B.transpose() * u + z;
    const Eigen::VectorXd y = A * w;
    EccTrialResult r;
    try {
      const LPSolution sol = solve_P1(A, y);
      if (sol.status == LPStatus::Optimal) {
        const Eigen::VectorXd u1 = B * (w - sol.x);
        const double rel = (u1 - u).lpNorm<Eigen::Infinity>() /
                           std::max(1e-300, u.lpNorm<Eigen::Infinity>());
        r.exact = rel <= 1e-6;
      }
    } catch (const std::exception&) {
      r.solver_error = true;
    }
    out[t] = r;
  });
  return out;
}

McFaceCount mc_face_count(Family family, int k, int n, int N, int trials,
                          uint64_t seed) {
  if (N > 12) throw std::domain_error("mc_face_count: N too large (budget)");
  const bool cross = family == Family::CrossPolytope;
  if (face_work(N, k, cross) > 500.0 * (cross ? (1 << (k + 1)) : 1))
    throw std::domain_error("mc_face_count: face budget exceeded");
  if (!(k >= 0 && k < N && n >= 1 && trials >= 1))
    throw std::domain_error("mc_face_count: bad arguments");

  std::vector<double> counts(trials);
  parallel_trials(trials, [&](int t) {
    const Eigen::MatrixXd A =
        gaussian_matrix(n, N, derive_seed(seed, t, kTagMatrix));
    int surviving = 0;
    std::vector<int> support(k + 1);
    for (int i = 0; i <= k; ++i) support[i] = i;
    do {
      const unsigned sign_patterns = cross ? (1u << (k + 1)) : 1u;
      for (unsigned signs = 0; signs < sign_patterns; ++signs) {
        Eigen::VectorXd x0 = Eigen::VectorXd::Zero(N);
        for (int i = 0; i <= k; ++i)
          x0[support[i]] = ((signs >> i) & 1u) ? -1.0 : 1.0;
        x0 /= (k + 1.0);
        const TrialOutcome o = survival_outcome(family, A, x0, 1e-6);
        if (o == TrialOutcome::Success || o == TrialOutcome::Ambiguous) ++surviving;
      }
    } while (next_combination(support, N));
    counts[t] = surviving;
  });
  double mean = 0.0;
  for (double c : counts) mean += c;
  mean /= trials;
  double var = 0.0;
  for (double c : counts) var += (c - mean) * (c - mean);
  var = trials > 1 ? var / (trials - 1) : 0.0;
  return McFaceCount{mean, std::sqrt(var / trials)};
}

}  // namespace polyphase
