#include "hawkdove/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "hawkdove/abm.hpp"
#include "hawkdove/svg.hpp"
#include "hawkdove/tables.hpp"

namespace hawkdove {
namespace {

std::string describe(const AnalysisConfig& cfg) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "g=%g l=%g", cfg.game.g(), cfg.game.l());
  out << buf << " theta={" << cfg.theta.to_string() << "} " << to_string(cfg.dynamics);
  return out.str();
}

int write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitIoError;
  }
  out << content;
  if (!out) {
    std::cerr << "error: failed writing '" << out_path << "'\n";
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace

std::string cmd_analyze(const AnalysisConfig& cfg) {
  const ResponseFunction f = cfg.build_response();
  const StationarySet states = find_stationary_states(f);
  const auto pure = pure_state_stability(cfg.game, cfg.theta, cfg.dynamics, cfg.tie);
  const auto verdict = theorem1_verdict(cfg.game, cfg.theta, cfg.dynamics, cfg.tie);
  const Thresholds th = thresholds(cfg.game, cfg.dynamics);

  std::ostringstream out;
  out.precision(12);
  out << "{\"environment\":{\"g\":" << cfg.game.g() << ",\"l\":" << cfg.game.l()
      << ",\"theta\":\"" << cfg.theta.to_string() << "\",\"dynamics\":\""
      << to_string(cfg.dynamics) << "\",\"tie\":\"" << to_string(cfg.tie) << "\"},"
      << "\"thresholds\":{\"m_h\":" << th.m_h << ",\"m_d\":" << th.m_d << "},"
      << "\"pure_states\":{\"label\":\""
      << (pure.label == PureStability::Stable
              ? "stable"
              : (pure.label == PureStability::Unstable ? "unstable" : "boundary"))
      << "\",\"bounded_expectation_product\":" << pure.product << "},"
      << "\"verdict\":\"" << to_string(verdict) << "\","
      << "\"stationary\":" << to_json(states) << "}\n";
  return out.str();
}

std::string cmd_trajectory(const AnalysisConfig& cfg) {
  const ResponseFunction f = cfg.build_response();
  const StationarySet states = find_stationary_states(f);
  const State start = cfg.start.value_or(State(0.5, 0.5));
  const TrajectoryResult tr = integrate(f, start, cfg.integrator, &states);
  std::ostringstream out;
  out << "t,p1,p2\n";
  char buf[96];
  for (const auto& [t, p] : tr.path) {
    std::snprintf(buf, sizeof(buf), "%.6f,%.9f,%.9f\n", t, p[0], p[1]);
    out << buf;
  }
  return out.str();
}

std::string cmd_basins(const AnalysisConfig& cfg) {
  const ResponseFunction f = cfg.build_response();
  const BasinEstimate est = estimate_basins(f, cfg.basin_samples, cfg.seed, cfg.integrator);
  std::ostringstream out;
  out.precision(12);
  out << "{\"samples\":" << est.samples << ",\"seed\":" << est.seed << ",\"attractors\":[";
  for (std::size_t i = 0; i < est.shares.size(); ++i) {
    const auto& share = est.shares[i];
    const auto& s = est.states.states[share.state_index];
    if (i) out << ",";
    out << "{\"p1\":" << s.location[0] << ",\"p2\":" << s.location[1] << ",\"label\":\""
        << to_string(s.label) << "\",\"count\":" << share.count
        << ",\"fraction\":" << share.fraction
        << ",\"wilson_half_width\":" << share.wilson_half_width << "}";
  }
  out << "],\"unattributed\":{\"count\":" << est.unattributed
      << ",\"fraction\":" << est.unattributed_fraction << "}}\n";
  return out.str();
}

std::string cmd_basins_csv(const AnalysisConfig& cfg) {
  const ResponseFunction f = cfg.build_response();
  const BasinEstimate est = estimate_basins(f, cfg.basin_samples, cfg.seed, cfg.integrator);
  std::ostringstream out;
  out << "p1,p2,label,count,fraction,wilson_half_width\n";
  char buf[160];
  for (const auto& share : est.shares) {
    const auto& s = est.states.states[share.state_index];
    std::snprintf(buf, sizeof(buf), "%.9f,%.9f,%s,%ld,%.6f,%.6f\n", s.location[0], s.location[1],
                  to_string(s.label), share.count, share.fraction, share.wilson_half_width);
    out << buf;
  }
  std::snprintf(buf, sizeof(buf), ",,unattributed,%ld,%.6f,\n", est.unattributed,
                est.unattributed_fraction);
  out << buf;
  return out.str();
}

std::string cmd_abm(const AnalysisConfig& cfg) {
  const auto series = run_abm_replicates(cfg.abm_config(), cfg.abm_replicates, cfg.seed);
  std::ostringstream out;
  out << "event_block,p1_hat,p2_hat,replicate_id\n";
  char buf[96];
  for (std::size_t r = 0; r < series.size(); ++r) {
    for (const auto& row : series[r].rows) {
      std::snprintf(buf, sizeof(buf), "%ld,%.6f,%.6f,%zu\n", row.block, row.p1_hat, row.p2_hat,
                    r);
      out << buf;
    }
  }
  return out.str();
}

std::string cmd_plot(const AnalysisConfig& cfg) {
  const ResponseFunction f = cfg.build_response();
  const StationarySet states = find_stationary_states(f);
  const PhasePortrait portrait = nullcline_field(f, 18);
  return render_phase_portrait_svg(portrait, states, describe(cfg));
}

std::string cmd_sweep_csv(const SweepSpec& spec) {
  const auto rows = run_sweep(spec);
  std::ostringstream out;
  out << sweep_csv_header() << "\n";
  for (const auto& row : rows) out << to_csv_row(row) << "\n";
  return out.str();
}

std::string cmd_tables(bool& ok) {
  const LimitTable computed = compute_limit_table();
  const auto mismatches = check_limit_table(computed);
  ok = mismatches.empty();
  return format_limit_table_report(computed, mismatches);
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"sampling-dynamics toolkit for two-population hawk-dove games"};
  app.require_subcommand(1);

  std::string config_path, out_path;
  std::string format = "csv";
  std::uint64_t seed_override = 0;
  bool seed_set = false;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    auto* copt = sub->add_option("--config", config_path, "JSON config file");
    if (needs_config) copt->required();
    sub->add_option("--out", out_path, "output path (default: stdout)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t s) { seed_override = s; seed_set = true; },
        "override the config seed");
  };

  auto* analyze = app.add_subcommand("analyze", "stationary states and stability report");
  add_common(analyze, true);
  auto* trajectory = app.add_subcommand("trajectory", "integrate the mean dynamics (CSV)");
  add_common(trajectory, true);
  double start1 = -1.0, start2 = -1.0;
  trajectory->add_option("--p1", start1, "start hawk share, population 1");
  trajectory->add_option("--p2", start2, "start hawk share, population 2");
  auto* basins = app.add_subcommand("basins", "Monte Carlo basin-of-attraction estimate");
  add_common(basins, true);
  long basin_n = 0;
  basins->add_option("--n", basin_n, "number of uniform random starts");
  auto* abm = app.add_subcommand("abm", "finite-population stochastic simulation (CSV)");
  add_common(abm, true);
  auto* sweep = app.add_subcommand("sweep", "parameter sweep over the standard grid (CSV)");
  add_common(sweep, false);
  long sweep_starts = 400;
  sweep->add_option("--starts", sweep_starts, "basin samples per cell (0 disables basins)");
  auto* tables = app.add_subcommand("tables", "limiting-polynomial tables vs golden values");
  tables->add_option("--out", out_path, "output path (default: stdout)");
  auto* plot = app.add_subcommand("plot", "phase portrait (SVG)");
  add_common(plot, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitConfigError;
  }

  try {
    AnalysisConfig cfg;
    if (!config_path.empty()) {
      cfg = load_config(config_path);
      if (seed_set) cfg.seed = seed_override;
    }

    if (analyze->parsed()) return write_output(cmd_analyze(cfg), out_path);
    if (trajectory->parsed()) {
      if (start1 >= 0.0 && start2 >= 0.0) cfg.start = State(start1, start2);
      return write_output(cmd_trajectory(cfg), out_path);
    }
    if (basins->parsed()) {
      if (basin_n > 0) cfg.basin_samples = basin_n;
      if (format == "csv") return write_output(cmd_basins_csv(cfg), out_path);
      return write_output(cmd_basins(cfg), out_path);
    }
    if (abm->parsed()) return write_output(cmd_abm(cfg), out_path);
    if (sweep->parsed()) {
      SweepSpec spec = SweepSpec::standard();
      spec.basin_samples = sweep_starts;
      if (seed_set) spec.seed = seed_override;
      return write_output(cmd_sweep_csv(spec), out_path);
    }
    if (tables->parsed()) {
      bool ok = false;
      const std::string report = cmd_tables(ok);
      const int rc = write_output(report, out_path);
      if (rc != kExitOk) return rc;
      return ok ? kExitOk : kExitGoldenMismatch;
    }
    if (plot->parsed()) return write_output(cmd_plot(cfg), out_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  }
  return kExitConfigError;
}

}  // namespace hawkdove
