#include "hawkdove/sweep.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <thread>

#include "hawkdove/rng.hpp"

namespace hawkdove {
namespace {

SweepVerdict judge(const SweepRow& row, const BasinEstimate& basins) {
  if (row.pure_label == PureStability::Boundary) return SweepVerdict::Boundary;
  for (const auto& s : basins.states.states)
    if (s.label == StabilityLabel::Marginal) return SweepVerdict::Boundary;
  if (row.basin_symmetric >= 0.99) return SweepVerdict::GlobalMixedSymmetric;
  if (row.basin_pure >= 0.99) return SweepVerdict::GlobalPure;
  if (row.basin_symmetric + row.basin_other_interior >= 0.99) return SweepVerdict::MixedOther;
  int big = 0;
  for (const auto& share : basins.shares)
    if (share.fraction >= 0.05) ++big;
  if (big >= 2) return SweepVerdict::Multistable;
  return SweepVerdict::Boundary;
}

SweepRow run_cell(const SweepSpec& spec, Real g, const std::string& dist, DynamicsKind kind,
                  std::uint64_t cell_seed) {
  SweepRow row;
  row.g = g;
  row.distribution = dist;
  row.kind = kind;
  try {
    const Game game(g, g);
    const SampleDistribution theta = SampleDistribution::parse(dist);
    row.pure_label = pure_state_stability(game, theta, kind).label;
    const ResponseFunction f = kind == DynamicsKind::ActionSampling
                                   ? build_action_response(game, theta)
                                   : build_payoff_response(game, theta);
    const StationarySet states = find_stationary_states(f);
    row.stationary_count = static_cast<int>(states.states.size());

    int symmetric_index = -1;
    for (std::size_t i = 0; i < states.states.size(); ++i) {
      const auto& s = states.states[i];
      if (is_interior(s.location) && is_symmetric(s.location, 1e-6)) {
        symmetric_index = static_cast<int>(i);
        row.symmetric_label = s.label;
        row.symmetric_p = s.location[0];
      }
    }

    if (spec.basin_samples > 0 && !states.continuum) {
      BasinEstimate basins = estimate_basins(f, spec.basin_samples, cell_seed, spec.integrator);
      for (const auto& share : basins.shares) {
        const auto& s = basins.states.states[share.state_index];
        const bool pure = !is_interior(s.location);
        const bool symmetric = share.state_index == symmetric_index;
        if (pure)
          row.basin_pure += share.fraction;
        else if (symmetric)
          row.basin_symmetric += share.fraction;
        else
          row.basin_other_interior += share.fraction;
      }
      row.basin_unresolved = basins.unattributed_fraction;
      row.verdict = judge(row, basins);
    } else {
      row.verdict = SweepVerdict::Boundary;
    }
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

const char* to_string(SweepVerdict v) {
  switch (v) {
    case SweepVerdict::GlobalPure: return "global_pure";
    case SweepVerdict::GlobalMixedSymmetric: return "global_mixed_symmetric";
    case SweepVerdict::MixedOther: return "mixed_other";
    case SweepVerdict::Multistable: return "multistable";
    case SweepVerdict::Boundary: return "boundary";
  }
  return "?";
}

SweepSpec SweepSpec::standard() {
  SweepSpec spec;
  for (int i = 0; i < 10; ++i) spec.g_values.push_back(0.05 + 0.1 * i);
  for (int k = 2; k <= 10; ++k) spec.distributions.push_back("degenerate:" + std::to_string(k));
  for (int k = 2; k <= 10; ++k) spec.distributions.push_back("uniform:" + std::to_string(k));
  for (int q = 1; q <= 9; ++q) {
    std::ostringstream id;
    id << "biased1:0." << q;
    spec.distributions.push_back(id.str());
  }
  return spec;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  struct Cell {
    Real g;
    std::string dist;
    DynamicsKind kind;
  };
  std::vector<Cell> cells;
  for (DynamicsKind kind : spec.kinds)
    for (Real g : spec.g_values)
      for (const auto& dist : spec.distributions) cells.push_back({g, dist, kind});

  std::vector<SweepRow> rows(cells.size());
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<std::size_t>(hw, cells.size()));
  std::vector<std::future<void>> futures;
  std::atomic<std::size_t> next{0};
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= cells.size()) return;
        rows[i] = run_cell(spec, cells[i].g, cells[i].dist, cells[i].kind,
                           derive_seed(spec.seed, i));
      }
    }));
  }
  for (auto& f : futures) f.get();
  return rows;
}

std::string sweep_csv_header() {
  return "g,theta,dynamics,n_states,pure_label,symmetric_label,symmetric_p,basin_symmetric,"
         "basin_pure,basin_other_interior,basin_unresolved,verdict,error";
}

std::string to_csv_row(const SweepRow& row) {
  std::ostringstream out;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", row.g);
  out << buf << "," << row.distribution << "," << to_string(row.kind) << ",";
  if (row.error.empty()) {
    const char* pure = row.pure_label == PureStability::Stable
                           ? "stable"
                           : (row.pure_label == PureStability::Unstable ? "unstable" : "boundary");
    std::snprintf(buf, sizeof(buf), "%.6f", row.symmetric_p);
    out << row.stationary_count << "," << pure << "," << to_string(row.symmetric_label) << ","
        << buf;
    const Real fr[] = {row.basin_symmetric, row.basin_pure, row.basin_other_interior,
                       row.basin_unresolved};
    for (Real v : fr) {
      std::snprintf(buf, sizeof(buf), "%.4f", v);
      out << "," << buf;
    }
    out << "," << to_string(row.verdict) << ",";
  } else {
    out << ",,,,,,,,,";
    std::string msg = row.error;
    for (auto& c : msg)
      if (c == ',' || c == '\n') c = ';';
    out << msg;
  }
  return out.str();
}

}  // namespace hawkdove
