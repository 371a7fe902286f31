#ifndef HAWKDOVE_SWEEP_HPP
#define HAWKDOVE_SWEEP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hawkdove/equilibria.hpp"
#include "hawkdove/flow.hpp"

namespace hawkdove {

enum class SweepVerdict : std::uint8_t {
  GlobalPure,
  GlobalMixedSymmetric,
  MixedOther,
  Multistable,
  Boundary,
};

const char* to_string(SweepVerdict v);

struct SweepRow {
  Real g;
  std::string distribution;
  DynamicsKind kind;
  int stationary_count = 0;
  PureStability pure_label = PureStability::Boundary;
  StabilityLabel symmetric_label = StabilityLabel::Marginal;
  Real symmetric_p = 0.0;
  Real basin_symmetric = 0.0;
  Real basin_pure = 0.0;
  Real basin_other_interior = 0.0;
  Real basin_unresolved = 0.0;
  SweepVerdict verdict = SweepVerdict::Boundary;
  std::string error;  // nonempty when the cell failed; other fields undefined
};

struct SweepSpec {
  std::vector<Real> g_values;            // defaults to 0.05, 0.15, ..., 0.95
  std::vector<std::string> distributions;  // parseable ids; defaults to the 27 standard families
  std::vector<DynamicsKind> kinds = {DynamicsKind::ActionSampling, DynamicsKind::PayoffSampling};
  long basin_samples = 400;  // 0 disables basin estimation (verdicts become Boundary)
  std::uint64_t seed = 1;
  IntegrateOptions integrator;

  static SweepSpec standard();  // the 10 x 27 x 2 grid
};

// Runs every (g, distribution, kind) cell; row order is fixed by cell index
// regardless of execution order. Per-cell failures are reported in the error
// column, never thrown.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

std::string sweep_csv_header();
std::string to_csv_row(const SweepRow& row);

}  // namespace hawkdove

#endif
