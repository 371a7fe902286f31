#ifndef HAWKDOVE_FLOW_HPP
#define HAWKDOVE_FLOW_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "hawkdove/equilibria.hpp"
#include "hawkdove/response.hpp"

namespace hawkdove {

struct IntegrateOptions {
  Real delta = 1.0;          // revision rate; rescales time only
  Real t_max = 1e4;          // give up (Diverged) beyond this time
  Real converge_tol = 1e-9;  // stop when the max-norm of pdot falls below
  int record_stride = 10;    // path sample every this many RK4 steps
  // Stop as soon as the state is inside half the attribution radius of an
  // asymptotically stable state; used by basin estimation.
  bool stop_at_attractor = false;
  Real attribution_radius = 1e-4;
};

struct TrajectoryResult {
  std::vector<std::pair<Real, State>> path;  // sampled (t, state), includes endpoints
  std::optional<State> limit;                // unset iff diverged
  bool diverged = false;
  std::optional<int> limit_state_index;  // into the supplied stationary set
  Real max_clamp = 0.0;                  // largest boundary clamp applied
};

// Integrates pdot_i = delta * (w(p_j) - p_i) with classical fixed-step RK4
// (step 0.01/delta). The state is clamped to the unit square after each step.
// When `attractors` is given, a converged limit is matched to the nearest
// stationary state within the attribution radius (marginal states and
// continuum markers are never matched).
TrajectoryResult integrate(const ResponseFunction& f, const State& start,
                           const IntegrateOptions& opts = {},
                           const StationarySet* attractors = nullptr);

struct BasinShare {
  int state_index;       // into StationarySet.states
  long count;
  Real fraction;
  Real wilson_half_width;  // 95% Wilson interval half-width
};

struct BasinEstimate {
  StationarySet states;
  std::vector<BasinShare> shares;  // one entry per stationary state
  long unattributed = 0;
  Real unattributed_fraction = 0.0;
  long samples = 0;
  std::uint64_t seed = 0;
};

// Monte Carlo basin estimate from n uniform starts in the open unit square
// (1e-6 inset). Deterministic for a given seed regardless of thread count.
BasinEstimate estimate_basins(const ResponseFunction& f, long n, std::uint64_t seed,
                              const IntegrateOptions& opts = {});

// Baseline monotone dynamics: pdot_i = p_i * (u(h, p_j) - u(p_i, p_j)).
State replicator_step(const Game& game, const State& s);

// RK4 flow of the replicator field, same stepping and stopping rules.
TrajectoryResult integrate_replicator(const Game& game, const State& start,
                                      const IntegrateOptions& opts = {});

struct PhasePortrait {
  int resolution;
  std::vector<State> grid_points;
  std::vector<State> grid_velocities;     // delta = 1
  std::vector<State> p1_nullcline;        // states with pdot_1 = 0: p1 = w(p2)
  std::vector<State> p2_nullcline;        // states with pdot_2 = 0: p2 = w(p1)
};

PhasePortrait nullcline_field(const ResponseFunction& f, int resolution);

}  // namespace hawkdove

#endif
