#ifndef HAWKDOVE_ABM_HPP
#define HAWKDOVE_ABM_HPP

#include <cstdint>
#include <vector>

#include "hawkdove/flow.hpp"
#include "hawkdove/game.hpp"
#include "hawkdove/sampling.hpp"

namespace hawkdove {

// Finite-population stochastic counterpart of the mean dynamics: N agents per
// population; one event revises one uniformly drawn agent in each population,
// both computed from the pre-event state. N events = one expected revision
// per agent = one recorded block.
struct AbmConfig {
  int population_size = 1000;  // N >= 2
  int horizon = 200;           // recorded blocks (expected revisions per agent)
  std::uint64_t seed = 1;
  Game game{0.5, 0.5};
  SampleDistribution theta = SampleDistribution::degenerate(1);
  DynamicsKind kind = DynamicsKind::ActionSampling;
  TieRule tie = TieRule::DoveFavoring;
  State start{0.5, 0.5};
  // Sampling with replacement matches the binomial model exactly; without
  // replacement deviates at O(k/N) and is kept as a robustness option.
  bool with_replacement = true;
};

struct AbmRow {
  long block;
  Real p1_hat;
  Real p2_hat;
};

struct AbmSeries {
  std::vector<AbmRow> rows;  // block 0 (initial shares) through horizon
  State terminal;
};

AbmSeries run_abm(const AbmConfig& config);

// Replicates with counter-derived seeds; row order is by replicate index.
std::vector<AbmSeries> run_abm_replicates(const AbmConfig& config, int replicates,
                                          std::uint64_t master_seed);

struct DeviationReport {
  Real sup_deviation;       // max over shared blocks, max norm
  Real terminal_deviation;  // max norm at the final shared block
};

// Compares an ABM series against a deterministic trajectory of the same
// environment and start; ABM block b corresponds to time b/delta.
DeviationReport compare_to_mean_field(const AbmSeries& series, const TrajectoryResult& trajectory,
                                      Real delta = 1.0);

}  // namespace hawkdove

#endif
