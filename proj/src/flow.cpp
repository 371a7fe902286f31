#include "hawkdove/flow.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <stdexcept>
#include <thread>

#include "hawkdove/rng.hpp"

namespace hawkdove {
namespace {

Real clamp01_track(Real x, Real& max_clamp) {
  if (x < 0.0) {
    max_clamp = std::max(max_clamp, -x);
    return 0.0;
  }
  if (x > 1.0) {
    max_clamp = std::max(max_clamp, x - 1.0);
    return 1.0;
  }
  return x;
}

// Index of the nearest attributable stationary state within `radius` (max
// norm), or nullopt. Marginal and continuum entries are skipped.
std::optional<int> attribute(const StationarySet& set, const State& p, Real radius) {
  std::optional<int> best;
  Real best_dist = radius;
  for (std::size_t i = 0; i < set.states.size(); ++i) {
    const auto& s = set.states[i];
    if (s.label == StabilityLabel::Marginal || s.label == StabilityLabel::Continuum) continue;
    const Real d = (s.location - p).cwiseAbs().maxCoeff();
    if (d <= best_dist) {
      best_dist = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

TrajectoryResult integrate_field(const std::function<State(const State&)>& field,
                                 const State& start, const IntegrateOptions& opts,
                                 const StationarySet* attractors) {
  if (!in_unit_square(start)) throw std::invalid_argument("integrate: start outside [0,1]^2");
  if (!(opts.delta > 0.0)) throw std::invalid_argument("integrate: delta must be > 0");

  const Real h = 0.01 / opts.delta;
  const long max_steps = static_cast<long>(std::ceil(opts.t_max / h));
  TrajectoryResult out;
  State p = start;
  out.path.emplace_back(0.0, p);

  long step = 0;
  bool converged = false;
  while (step < max_steps) {
    const State k1 = field(p);
    if (k1.cwiseAbs().maxCoeff() < opts.converge_tol) {
      converged = true;
      break;
    }
    if (opts.stop_at_attractor && attractors) {
      const auto idx = attribute(*attractors, p, 0.5 * opts.attribution_radius);
      if (idx && attractors->states[*idx].label == StabilityLabel::AsymptoticallyStable) {
        converged = true;
        break;
      }
    }
    const State k2 = field(p + 0.5 * h * k1);
    const State k3 = field(p + 0.5 * h * k2);
    const State k4 = field(p + h * k3);
    p += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    p[0] = clamp01_track(p[0], out.max_clamp);
    p[1] = clamp01_track(p[1], out.max_clamp);
    ++step;
    if (step % opts.record_stride == 0) out.path.emplace_back(step * h, p);
  }

  if (out.path.back().first != step * h) out.path.emplace_back(step * h, p);
  if (converged) {
    out.limit = p;
    if (attractors) out.limit_state_index = attribute(*attractors, p, opts.attribution_radius);
  } else {
    out.diverged = true;
  }
  return out;
}

Real wilson_half_width(long successes, long n) {
  if (n == 0) return 0.0;
  const Real z = 1.959963984540054;  // 97.5% normal quantile
  const Real phat = static_cast<Real>(successes) / n;
  const Real z2n = z * z / n;
  return z * std::sqrt(phat * (1.0 - phat) / n + z2n / (4.0 * n)) / (1.0 + z2n);
}

}  // namespace

TrajectoryResult integrate(const ResponseFunction& f, const State& start,
                           const IntegrateOptions& opts, const StationarySet* attractors) {
  const Real d = opts.delta;
  auto field = [&f, d](const State& p) {
    return State(d * (f(p[1]) - p[0]), d * (f(p[0]) - p[1]));
  };
  return integrate_field(field, start, opts, attractors);
}

BasinEstimate estimate_basins(const ResponseFunction& f, long n, std::uint64_t seed,
                              const IntegrateOptions& opts) {
  if (n < 1) throw std::invalid_argument("estimate_basins: n >= 1");
  BasinEstimate out;
  out.states = find_stationary_states(f);
  out.samples = n;
  out.seed = seed;

  IntegrateOptions run = opts;
  run.stop_at_attractor = true;
  run.record_stride = 1 << 30;  // basins need endpoints only

  const int n_states = static_cast<int>(out.states.states.size());
  std::vector<long> counts(n_states, 0);
  long unattributed = 0;

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const int workers = static_cast<int>(std::min<unsigned>(hw, 8));
  std::vector<std::future<std::pair<std::vector<long>, long>>> futures;
  for (int w = 0; w < workers; ++w) {
    futures.push_back(std::async(std::launch::async, [&, w]() {
      std::vector<long> local(n_states, 0);
      long local_un = 0;
      for (long i = w; i < n; i += workers) {
        SplitMix64 rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
        const Real inset = 1e-6;
        const State start(inset + (1.0 - 2.0 * inset) * rng.next_double(),
                          inset + (1.0 - 2.0 * inset) * rng.next_double());
        const TrajectoryResult tr = integrate(f, start, run, &out.states);
        if (tr.limit_state_index)
          ++local[*tr.limit_state_index];
        else
          ++local_un;
      }
      return std::make_pair(local, local_un);
    }));
  }
  for (auto& fut : futures) {
    auto [local, local_un] = fut.get();
    for (int i = 0; i < n_states; ++i) counts[i] += local[i];
    unattributed += local_un;
  }

  for (int i = 0; i < n_states; ++i) {
    out.shares.push_back({i, counts[i], static_cast<Real>(counts[i]) / n,
                          wilson_half_width(counts[i], n)});
  }
  out.unattributed = unattributed;
  out.unattributed_fraction = static_cast<Real>(unattributed) / n;
  return out;
}

State replicator_step(const Game& game, const State& s) {
  State v;
  for (int i = 0; i < 2; ++i) {
    const Real p_own = s[i], p_opp = s[1 - i];
    v[i] = p_own * (mixed_payoff(game, 1.0, p_opp) - mixed_payoff(game, p_own, p_opp));
  }
  return v;
}

TrajectoryResult integrate_replicator(const Game& game, const State& start,
                                      const IntegrateOptions& opts) {
  auto field = [&game, d = opts.delta](const State& p) { return State(d * replicator_step(game, p)); };
  return integrate_field(field, start, opts, nullptr);
}

PhasePortrait nullcline_field(const ResponseFunction& f, int resolution) {
  if (resolution < 2) throw std::invalid_argument("nullcline_field: resolution >= 2");
  PhasePortrait out;
  out.resolution = resolution;
  const Real h = 1.0 / (resolution - 1);
  for (int i = 0; i < resolution; ++i) {
    for (int j = 0; j < resolution; ++j) {
      const State p(i * h, j * h);
      out.grid_points.push_back(p);
      out.grid_velocities.emplace_back(f(p[1]) - p[0], f(p[0]) - p[1]);
    }
  }
  const int samples = 513;
  const Real hs = 1.0 / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    const Real t = i * hs;
    out.p1_nullcline.emplace_back(f(t), t);  // p1 = w(p2) -> pdot_1 = 0
    out.p2_nullcline.emplace_back(t, f(t));  // p2 = w(p1) -> pdot_2 = 0
  }
  return out;
}

}  // namespace hawkdove
