// Scenario runner for the lattice gauge field-theory toolkit: verification
// suites, the gradient-flow solver, refinement sweeps, Poincare
// reconstruction and Noether checks, all driven by key=value configs.
//
// Exit codes: 0 success, 1 scientific failure, 2 usage or config error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lgt/config.hpp"
#include "lgt/reconstruct.hpp"
#include "lgt/report.hpp"
#include "lgt/snapshot.hpp"
#include "lgt/suites.hpp"
#include "lgt/synth.hpp"
#include "lgt/variation.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool out_set = false;
  int threads = 1;
};

lgt::KeyValueConfig load_config(const GlobalOpts& g) {
  if (g.config_path.empty()) return lgt::KeyValueConfig::from_string("");
  return lgt::KeyValueConfig::from_file(g.config_path);
}

std::uint64_t resolve_seed(const GlobalOpts& g, const lgt::KeyValueConfig& cfg) {
  if (g.seed_set) return g.seed;
  return cfg.get_u64("seed", 0);
}

std::string resolve_out(const GlobalOpts& g, const lgt::KeyValueConfig& cfg) {
  if (g.out_set) return g.out_dir;
  return cfg.get("out", "out");
}

void write_text(const std::string& dir, const std::string& name,
                const std::string& text) {
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + name + " under " + dir);
  f << text;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',' || c == ' ' || c == '\t') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

int cmd_verify(const GlobalOpts& g, const std::vector<std::string>& cli_suites) {
  const auto cfg = load_config(g);
  const auto seed = resolve_seed(g, cfg);
  const auto out = resolve_out(g, cfg);
  std::vector<std::string> suites = cli_suites;
  if (suites.empty() && cfg.has("suite")) suites = split_list(cfg.get("suite"));
  if (suites.empty()) {
    std::cerr << "verify: no suites selected (use --suite or suite= in the config)\n";
    return kExitUsage;
  }
  bool all = true;
  for (const auto& name : suites) {
    lgt::ResidualReport rep;
    try {
      rep = lgt::run_suite(name, seed);
    } catch (const std::invalid_argument& e) {
      std::cerr << "verify: " << e.what() << "\n";
      return kExitUsage;
    }
    rep.write(out, "suite_" + name);
    const bool ok = rep.all_pass();
    all = all && ok;
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "suite " << name << " ("
              << rep.rows.size() << " checks)\n";
    for (const auto& row : rep.rows)
      if (!row.pass)
        std::cout << "       failed: " << row.name << " linf="
                  << lgt::format_double(row.linf) << " tol="
                  << lgt::format_double(row.tol) << "\n";
  }
  return all ? kExitPass : kExitFail;
}

int cmd_solve(const GlobalOpts& g) {
  const auto cfg = load_config(g);
  const auto seed = resolve_seed(g, cfg);
  const auto out = resolve_out(g, cfg);
  std::mt19937_64 rng(seed);

  const lgt::LatticeChart chart = lgt::chart_from_config(cfg);
  for (int s : chart.signature().diag)
    if (s != 1) {
      std::cerr << "solve: gradient flow runs in Euclidean signature only\n";
      return kExitUsage;
    }
  const lgt::TheorySpec T = lgt::theory_from_config(cfg, chart);
  std::vector<std::string> notes;
  lgt::FormField A0 = lgt::initial_field_from_config(cfg, T, rng, &notes);
  lgt::FlowParams params = lgt::flow_params_from_config(cfg, seed);

  auto [A, trace] = lgt::gradient_flow_solve(T, A0, params);
  std::filesystem::create_directories(out);
  write_text(out, "solve_trace.csv", trace.to_csv());
  lgt::write_snapshot(A, (std::filesystem::path(out) / "final.snap").string());

  lgt::ResidualReport rep;
  rep.title = "solve";
  rep.chart = chart.describe();
  rep.theory = T.describe();
  rep.seed = seed;
  for (const auto& n : notes) rep.info("note", 0.0, 0.0, n);
  rep.check("final_residual", trace.residual_l2.back(), trace.residual_linf.back(),
            params.residual_tol);
  rep.info("iterations", 0.0, trace.iterations);
  rep.write(out, "solve_report");

  if (trace.diverged) {
    std::cerr << "solve: diverged: " << trace.diagnostic << "\n";
    return kExitFail;
  }
  if (!trace.converged) {
    std::cerr << "solve: did not reach tolerance within "
              << params.max_iters << " iterations\n";
    return kExitFail;
  }
  std::cout << "[PASS] solve converged in " << trace.iterations
            << " iterations, residual Linf = "
            << lgt::format_double(trace.residual_linf.back()) << "\n";
  return kExitPass;
}

int cmd_sweep(const GlobalOpts& g) {
  const auto cfg = load_config(g);
  const auto seed = resolve_seed(g, cfg);
  const auto out = resolve_out(g, cfg);
  const int levels = cfg.get_int("sweep.levels", 3);
  if (levels < 2) {
    std::cerr << "sweep: need at least 2 levels\n";
    return kExitUsage;
  }
  std::string name;
  try {
    name = cfg.get("sweep.residual");
  } catch (const lgt::ConfigError& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kExitUsage;
  }
  lgt::SweepResult sw;
  try {
    sw = lgt::run_sweep(name, levels, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "sweep: " << e.what() << "\n";
    return kExitUsage;
  }
  write_text(out, "sweep_" + name + ".csv", sw.to_csv());
  std::cout << sw.to_csv();
  return kExitPass;
}

int cmd_reconstruct(const GlobalOpts& g) {
  const auto cfg = load_config(g);
  const auto out = resolve_out(g, cfg);
  const auto seed = resolve_seed(g, cfg);
  std::string input;
  try {
    input = cfg.get("reconstruct.input");
  } catch (const lgt::ConfigError& e) {
    std::cerr << "reconstruct: " << e.what() << "\n";
    return kExitUsage;
  }
  lgt::FormField F = lgt::read_snapshot(input);
  std::vector<int> origin;
  if (cfg.has("reconstruct.origin")) {
    origin = cfg.get_ints("reconstruct.origin");
  } else {
    for (int n : F.chart().sizes()) origin.push_back(n / 2);
  }
  const double tol = cfg.get_double("reconstruct.tol", 1e-10);

  lgt::FormField A(F.chart(), F.algebra(), 1);
  try {
    A = lgt::poincare_reconstruct(F, origin, tol);
  } catch (const lgt::CompatibilityError& e) {
    std::cerr << "reconstruct: " << e.what() << "\n";
    return kExitFail;
  }
  std::filesystem::create_directories(out);
  lgt::write_snapshot(A, (std::filesystem::path(out) / "reconstructed.snap").string());

  lgt::FormField round = lgt::curvature(A);
  lgt::ResidualReport rep;
  rep.title = "reconstruct";
  rep.chart = F.chart().describe();
  rep.seed = seed;
  rep.info("round_trip_gap", 0.0, lgt::linf_distance(round, F));
  rep.info("input_linf", 0.0, lgt::linf_norm(F));
  if (cfg.has("loop.steps")) {
    // holonomy of the reconstructed potential around a configured loop
    std::vector<int> origin = cfg.has("loop.origin") ? cfg.get_ints("loop.origin")
                                                     : std::vector<int>(F.chart().dim(), 0);
    const auto loop = lgt::LoopSpec::parse(origin, cfg.get("loop.steps"));
    const lgt::GroupElement g = lgt::holonomy(A, loop);
    rep.info("loop_holonomy_log", 0.0, g.log_norm(), cfg.get("loop.steps"));
  }
  rep.write(out, "reconstruct_report");
  std::cout << "[PASS] reconstruct: round-trip gap Linf = "
            << lgt::format_double(lgt::linf_distance(round, F)) << "\n";
  return kExitPass;
}

int cmd_noether(const GlobalOpts& g) {
  const auto cfg = load_config(g);
  const auto seed = resolve_seed(g, cfg);
  const auto out = resolve_out(g, cfg);
  std::mt19937_64 rng(seed);

  const lgt::LatticeChart chart = lgt::chart_from_config(cfg);
  const lgt::TheorySpec T = lgt::theory_from_config(cfg, chart);
  std::vector<std::string> notes;
  lgt::FormField A = lgt::initial_field_from_config(cfg, T, rng, &notes);
  const int samples = cfg.get_int("noether.samples", 20);
  const double tol = cfg.get_double("noether.tol", -1.0);

  lgt::ResidualReport rep;
  rep.title = "noether";
  rep.chart = chart.describe();
  rep.theory = T.describe();
  rep.seed = seed;
  for (const auto& n : notes) rep.info("note", 0.0, 0.0, n);

  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    lgt::FormField div(chart, lgt::LieAlgebra::u1(), 0);
    if (T.kind == lgt::TheoryKind::yang_mills) {
      lgt::FormField xi =
          lgt::random_smooth_form(rng, chart, 0, lgt::AlgebraKind::su2, 3, 1.0);
      div = lgt::noether_divergence(T, A, xi);
    } else {
      lgt::FormField chi = lgt::random_smooth_form(
          rng, chart, T.potential_degree - 1, lgt::AlgebraKind::u1, 3, 1.0);
      lgt::FormField xi = lgt::exterior_derivative(chi);
      div = lgt::noether_divergence(T, A, xi);
    }
    worst = std::max(worst, lgt::linf_norm(div));
  }
  if (tol >= 0.0)
    rep.check("max_divergence", 0.0, worst, tol);
  else
    rep.info("max_divergence", 0.0, worst);
  rep.write(out, "noether_report");
  std::cout << (rep.all_pass() ? "[PASS] " : "[FAIL] ")
            << "noether: max |div J|_inf = " << lgt::format_double(worst) << "\n";
  return rep.all_pass() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice gauge field-theory toolkit"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  GlobalOpts g;
  app.add_option("--config", g.config_path, "scenario config file (key = value)");
  app.add_option("--out", g.out_dir, "output directory")->each([&](const std::string&) {
    g.out_set = true;
  });
  app.add_option("--seed", g.seed, "random seed")->each([&](const std::string&) {
    g.seed_set = true;
  });
  app.add_option("--threads", g.threads, "worker thread bound (evaluation is serial)")
      ->check(CLI::PositiveNumber);

  auto* verify = app.add_subcommand("verify", "run invariant suites");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites, "suite name (repeatable)");

  auto* solve = app.add_subcommand("solve", "gradient-flow solve");
  auto* sweep = app.add_subcommand("sweep", "refinement sweep of a named residual");
  auto* reconstruct = app.add_subcommand("reconstruct", "Poincare reconstruction");
  auto* noether = app.add_subcommand("noether", "Noether divergence check");
  // global flags may follow the subcommand
  for (auto* sub : {verify, solve, sweep, reconstruct, noether}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(g, suites);
    if (solve->parsed()) return cmd_solve(g);
    if (sweep->parsed()) return cmd_sweep(g);
    if (reconstruct->parsed()) return cmd_reconstruct(g);
    if (noether->parsed()) return cmd_noether(g);
  } catch (const lgt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
