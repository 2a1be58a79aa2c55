#include "polyphase/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "polyphase/angles.hpp"
#include "polyphase/bounds.hpp"
#include "polyphase/linprog.hpp"
#include "polyphase/specfun.hpp"

namespace polyphase {

namespace {

Family parse_family(const std::string& s) {
  if (s == "simplex") return Family::Simplex;
  if (s == "cross") return Family::CrossPolytope;
  throw CLI::ValidationError("--family", "expected 'simplex' or 'cross'");
}

TransitionKind parse_kind(const std::string& s) {
  if (s == "weak") return TransitionKind::Weak;
  if (s == "strong") return TransitionKind::Strong;
  throw CLI::ValidationError("--kind", "expected 'weak' or 'strong'");
}

const char* family_name(Family f) { return f == Family::Simplex ? "simplex" : "cross"; }
const char* kind_name(TransitionKind k) { return k == TransitionKind::Weak ? "weak" : "strong"; }

std::vector<double> parse_grid(const std::string& s) {
  // either "a:b:count" (geometric if a>0 and flagged by 'g' prefix) or a
  // comma-separated list
  std::vector<double> out;
  if (s.find(':') != std::string::npos) {
    double a, b;
    int count;
    char geom = 0;
    std::string body = s;
    if (!body.empty() && (body[0] == 'g' || body[0] == 'l')) { geom = body[0]; body = body.substr(1); }
    std::istringstream in(body);
    char c1, c2;
    if (!(in >> a >> c1 >> b >> c2 >> count) || c1 != ':' || c2 != ':' || count < 1)
      throw CLI::ValidationError("--delta-grid", "expected a:b:count");
    for (int i = 0; i < count; ++i) {
      const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
      out.push_back(geom == 'g' ? a * std::pow(b / a, t) : a + (b - a) * t);
    }
  } else {
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(std::stod(tok));
  }
  return out;
}

uint64_t parse_seed(const std::string& s) { return std::stoull(s); }

int to_int(const std::map<std::string, std::string>& kv, const std::string& key,
           std::optional<int> fallback = std::nullopt) {
  auto it = kv.find(key);
  if (it == kv.end()) {
    if (fallback) return *fallback;
    throw std::invalid_argument("config: missing key '" + key + "'");
  }
  return std::stoi(it->second);
}

Table grid_table(const GridResult& g) {
  Table t;
  t.header = {"family", "N", "n", "k", "trials", "successes", "ambiguous", "errors"};
  for (const auto& c : g.cells)
    t.rows.push_back({family_name(g.config.family), std::to_string(g.config.N),
                      std::to_string(c.n), std::to_string(c.k), std::to_string(c.trials),
                      std::to_string(c.successes), std::to_string(c.ambiguous),
                      std::to_string(c.errors)});
  return t;
}

int run_selftest() {
  // quick library sanity: solver residuals, a threshold ballpark, a tiny LP
  const GammaDual gd = solve_s_gamma(0.2);
  if (std::fabs(mills_R(gd.s_gamma) - 0.8) > 1e-10) { std::cout << "selftest: duals FAIL\n"; return 1; }
  const double z = solve_saddlepoint_z(0.375).z_gamma;
  if (std::fabs(z + 0.90696) > 1e-3) { std::cout << "selftest: saddlepoint FAIL\n"; return 1; }
  LPInstance inst;
  inst.constraint_matrix.resize(1, 2);
  inst.constraint_matrix << 1.0, 1.0;
  inst.rhs = Eigen::VectorXd::Ones(1);
  inst.costs.resize(2);
  inst.costs << 1.0, 2.0;
  const LPSolution sol = lp_solve(inst);
  if (sol.status != LPStatus::Optimal || std::fabs(sol.objective - 1.0) > 1e-9) {
    std::cout << "selftest: linprog FAIL\n";
    return 1;
  }
  std::cout << "selftest: ok\n";
  return 0;
}

int run_checked(int argc, const char* const* argv);

}  // namespace

int run(int argc, const char* const* argv) {
  try {
    return run_checked(argc, argv);
  } catch (const std::ios_base::failure& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return 3;
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    std::cerr << "error: " << what << '\n';
    return what.find("cannot open") != std::string::npos ||
                   what.find("write failed") != std::string::npos ||
                   what.find("rename failed") != std::string::npos
               ? 3
               : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

namespace {

int run_checked(int argc, const char* const* argv) {
  CLI::App app{"face-count phase transitions of randomly projected polytopes"};
  app.require_subcommand(1);

  // ---- thresholds ----
  auto* th = app.add_subcommand("thresholds", "phase-transition curves rho(delta)");
  std::string th_family = "simplex", th_kind = "weak", th_grid, th_out;
  double th_delta = -1.0;
  bool th_asym = false;
  th->add_option("--family", th_family);
  th->add_option("--kind", th_kind);
  th->add_option("--delta", th_delta);
  th->add_option("--delta-grid", th_grid);
  th->add_option("--out", th_out);
  th->add_flag("--asymptotic", th_asym, "also report the small-delta closed form");

  // ---- bound ----
  auto* bd = app.add_subcommand("bound", "finite-N discrepancy bound at (k,n,N)");
  std::string bd_family = "simplex", bd_kind = "strong";
  int bd_k = 0, bd_n = 0, bd_N = 0;
  bool bd_rv = false;
  bd->add_option("--family", bd_family);
  bd->add_option("--kind", bd_kind);
  bd->add_option("--k", bd_k)->required();
  bd->add_option("--n", bd_n)->required();
  bd->add_option("--N", bd_N)->required();
  bd->add_flag("--rv", bd_rv, "also print the Rudelson-Vershynin comparison bound");

  // ---- levelcurve ----
  auto* lc = app.add_subcommand("levelcurve", "largest rho with bound <= level, per delta");
  std::string lc_family = "simplex", lc_kind = "strong", lc_grid = "0.1:0.9:9", lc_out;
  int lc_N = 0;
  double lc_level = 1.0;
  lc->add_option("--family", lc_family);
  lc->add_option("--kind", lc_kind);
  lc->add_option("--N", lc_N)->required();
  lc->add_option("--level", lc_level);
  lc->add_option("--delta-grid", lc_grid);
  lc->add_option("--out", lc_out);

  // ---- angles ----
  auto* an = app.add_subcommand("angles", "internal/external angle values");
  std::string an_family = "simplex", an_method = "oracle";
  int an_k = -1, an_l = -1, an_N = -1;
  bool an_external = false;
  an->add_flag("--external", an_external);
  an->add_option("--family", an_family);
  an->add_option("--method", an_method);
  an->add_option("--k", an_k);
  an->add_option("--l", an_l);
  an->add_option("--N", an_N);

  // ---- experiment ----
  auto* ex = app.add_subcommand("experiment", "seeded success-fraction grid");
  std::string ex_cfg;
  ex->add_option("--config", ex_cfg)->required();

  // ---- ecc ----
  auto* ec = app.add_subcommand("ecc", "error-correction round trip");
  std::string ec_cfg;
  ec->add_option("--config", ec_cfg)->required();

  app.add_subcommand("selftest", "quick internal checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }

  if (app.got_subcommand("selftest")) return run_selftest();

  if (app.got_subcommand(th)) {
    const Family fam = parse_family(th_family);
    const TransitionKind kind = parse_kind(th_kind);
    std::vector<double> grid;
    if (th_delta > 0.0) grid.push_back(th_delta);
    else if (!th_grid.empty()) grid = parse_grid(th_grid);
    else throw std::invalid_argument("thresholds: give --delta or --delta-grid");
    for (double d : grid)
      if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("thresholds: delta outside (0,1)");
    const PhaseCurve curve = phase_curve(fam, kind, grid);
    Table t;
    t.header = {"family", "kind", "delta", "rho"};
    if (th_asym) t.header.push_back("asymptotic_rho");
    for (const auto& s : curve.samples) {
      std::vector<std::string> row{family_name(fam), kind_name(kind),
                                   format_double(s.delta), format_double(s.rho)};
      if (th_asym) row.push_back(format_double(asymptotic_rho(fam, kind, s.delta)));
      t.rows.push_back(row);
    }
    if (!th_out.empty()) emit_csv(t, th_out);
    else std::cout << csv_string(t);
    return 0;
  }

  if (app.got_subcommand(bd)) {
    const Family fam = parse_family(bd_family);
    const TransitionKind kind = parse_kind(bd_kind);
    const TripleKNN t{bd_k, bd_n, bd_N};
    const BoundResult b = kind == TransitionKind::Strong ? strong_bound(fam, t) : weak_bound(fam, t);
    std::cout << "bound=" << format_double(b.value) << " log_bound=" << format_double(b.log_value)
              << '\n';
    if (bd_rv) std::cout << "rv_bound=" << format_double(rv_bound(bd_k, bd_n, bd_N)) << '\n';
    return 0;
  }

  if (app.got_subcommand(lc)) {
    const Family fam = parse_family(lc_family);
    const TransitionKind kind = parse_kind(lc_kind);
    const PhaseCurve curve = level_curve(fam, kind, lc_N, lc_level, parse_grid(lc_grid));
    Table t;
    t.header = {"family", "kind", "N", "delta", "rho_level"};
    for (const auto& s : curve.samples)
      t.rows.push_back({family_name(fam), kind_name(kind), std::to_string(lc_N),
                        format_double(s.delta), format_double(s.rho)});
    if (!lc_out.empty()) emit_csv(t, lc_out);
    else std::cout << csv_string(t);
    return 0;
  }

  if (app.got_subcommand(an)) {
    if (an_external) {
      if (an_l < 0 || an_N < 0) throw std::invalid_argument("angles --external: need --l and --N");
      std::cout << format_double(external_angle(parse_family(an_family), an_l, an_N)) << '\n';
    } else {
      if (an_k < 0 || an_l < 0) throw std::invalid_argument("angles: need --k and --l");
      const AngleMethod m = an_method == "saddle" ? AngleMethod::Saddlepoint : AngleMethod::Oracle;
      std::cout << format_double(internal_angle(an_k, an_l, m)) << '\n';
    }
    return 0;
  }

  if (app.got_subcommand(ex)) {
    static const std::vector<std::string> keys{"family", "kind", "N",      "n_list",
                                               "k_rule", "trials", "seed", "delta_grid",
                                               "out_path", "format"};
    const auto kv = load_config(ex_cfg, keys);
    ExperimentConfig cfg;
    cfg.family = parse_family(kv.count("family") ? kv.at("family") : "simplex");
    cfg.N = to_int(kv, "N");
    {
      std::istringstream in(kv.at("n_list"));
      std::string tok;
      while (std::getline(in, tok, ',')) cfg.n_list.push_back(std::stoi(tok));
    }
    if (kv.count("k_rule") && kv.at("k_rule") != "auto") {
      KRuleExplicit ks;
      std::istringstream in(kv.at("k_rule"));
      std::string tok;
      while (std::getline(in, tok, ',')) ks.ks.push_back(std::stoi(tok));
      cfg.k_rule = ks;
    } else {
      cfg.k_rule = KRuleAroundThreshold{};
    }
    cfg.trials_per_cell = to_int(kv, "trials", 1);
    cfg.master_seed = kv.count("seed") ? parse_seed(kv.at("seed")) : 0;
    const GridResult g = success_grid(cfg);
    const Table t = grid_table(g);
    if (kv.count("out_path")) {
      const std::string fmtv = kv.count("format") ? kv.at("format") : "csv";
      if (fmtv == "svg") {
        std::vector<double> deltas;
        for (int n : cfg.n_list) deltas.push_back(static_cast<double>(n) / cfg.N);
        std::sort(deltas.begin(), deltas.end());
        deltas.erase(std::unique(deltas.begin(), deltas.end()), deltas.end());
        const PhaseCurve overlay = phase_curve(cfg.family, TransitionKind::Weak, deltas);
        emit_svg_phase_diagram({overlay}, &g, kv.at("out_path"));
      } else {
        emit_csv(t, kv.at("out_path"));
      }
    } else {
      std::cout << csv_string(t);
    }
    return 0;
  }

  if (app.got_subcommand(ec)) {
    static const std::vector<std::string> keys{"N", "n", "k", "error_model",
                                               "trials", "seed", "out_path"};
    const auto kv = load_config(ec_cfg, keys);
    EccConfig cfg;
    cfg.N = to_int(kv, "N");
    cfg.n = to_int(kv, "n");
    cfg.k = to_int(kv, "k");
    cfg.trials = to_int(kv, "trials", 1);
    cfg.master_seed = kv.count("seed") ? parse_seed(kv.at("seed")) : 0;
    if (kv.count("error_model"))
      cfg.error_model = kv.at("error_model") == "adversarial"
                            ? ErrorModel::AdversarialFixedSupport
                            : ErrorModel::RandomSigned;
    const auto res = ecc_roundtrip(cfg);
    Table t;
    t.header = {"trial", "exact", "solver_error"};
    int exact = 0;
    for (size_t i = 0; i < res.size(); ++i) {
      exact += res[i].exact ? 1 : 0;
      t.rows.push_back({std::to_string(i), res[i].exact ? "1" : "0",
                        res[i].solver_error ? "1" : "0"});
    }
    if (kv.count("out_path")) emit_csv(t, kv.at("out_path"));
    else std::cout << csv_string(t);
    std::cerr << "exact_rate=" << format_double(static_cast<double>(exact) / res.size()) << '\n';
    return 0;
  }

  return 2;
}

}  // namespace

}  // namespace polyphase
