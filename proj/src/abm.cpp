#include "hawkdove/abm.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hawkdove/rng.hpp"

namespace hawkdove {
namespace {

struct Population {
  std::vector<std::uint8_t> hawk;  // 1 = hawk
  long hawk_count = 0;

  void init(int n, Real share, SplitMix64& rng) {
    hawk.assign(n, 0);
    hawk_count = 0;
    // round(share*N) hawks at random positions: the initial share is matched
    // as closely as N allows
    const long target = std::lround(share * n);
    for (long placed = 0; placed < target;) {
      const auto idx = rng.next_below(hawk.size());
      if (!hawk[idx]) {
        hawk[idx] = 1;
        ++placed;
        ++hawk_count;
      }
    }
  }

  Real share() const { return static_cast<Real>(hawk_count) / hawk.size(); }
};

// Cumulative masses for drawing k ~ theta by inversion.
struct ThetaSampler {
  std::vector<int> sizes;
  std::vector<Real> cum;

  explicit ThetaSampler(const SampleDistribution& theta) {
    Real c = 0.0;
    for (const auto& a : theta.atoms()) {
      sizes.push_back(a.k);
      c += a.mass;
      cum.push_back(c);
    }
    cum.back() = 1.0;
  }

  int draw(SplitMix64& rng) const {
    const Real u = rng.next_double();
    for (std::size_t i = 0; i < cum.size(); ++i)
      if (u < cum[i]) return sizes[i];
    return sizes.back();
  }
};

// Hawks seen in k draws from the opponent population.
int sample_hawks(const Population& opp, int k, bool with_replacement, SplitMix64& rng,
                 std::vector<std::uint32_t>& scratch) {
  const std::size_t n = opp.hawk.size();
  int hawks = 0;
  if (with_replacement) {
    for (int i = 0; i < k; ++i) hawks += opp.hawk[rng.next_below(n)];
    return hawks;
  }
  // without replacement: rejection over distinct indices (k <= N enforced)
  scratch.clear();
  for (int i = 0; i < k; ++i) {
    std::uint32_t idx;
    bool fresh;
    do {
      idx = static_cast<std::uint32_t>(rng.next_below(n));
      fresh = std::find(scratch.begin(), scratch.end(), idx) == scratch.end();
    } while (!fresh);
    scratch.push_back(idx);
    hawks += opp.hawk[idx];
  }
  return hawks;
}

}  // namespace

AbmSeries run_abm(const AbmConfig& cfg) {
  const int n = cfg.population_size;
  if (n < 2) throw std::invalid_argument("run_abm: population size >= 2");
  if (!cfg.with_replacement && cfg.theta.max_support() > n)
    throw std::invalid_argument("run_abm: sample size exceeds population without replacement");
  if (!in_unit_square(cfg.start)) throw std::invalid_argument("run_abm: start outside [0,1]^2");

  SplitMix64 rng(derive_seed(cfg.seed, 0x61626dULL));
  AbmSeries out;
  Population pop1, pop2;
  pop1.init(n, cfg.start[0], rng);
  pop2.init(n, cfg.start[1], rng);
  out.rows.push_back({0, pop1.share(), pop2.share()});

  const ThetaSampler sampler(cfg.theta);
  std::vector<std::uint32_t> scratch;
  scratch.reserve(cfg.theta.max_support());

  auto revise = [&](const Population& opp) -> Action {
    const int k = sampler.draw(rng);
    if (cfg.kind == DynamicsKind::ActionSampling) {
      const int hawks = sample_hawks(opp, k, cfg.with_replacement, rng, scratch);
      return action_best_reply(cfg.game, cfg.tie, hawks, k);
    }
    const int x = sample_hawks(opp, k, cfg.with_replacement, rng, scratch);
    const int y = sample_hawks(opp, k, cfg.with_replacement, rng, scratch);
    return payoff_best_reply(cfg.game, cfg.tie, x, y, k);
  };

  for (long block = 1; block <= cfg.horizon; ++block) {
    for (int ev = 0; ev < n; ++ev) {
      const auto i1 = rng.next_below(n);
      const auto i2 = rng.next_below(n);
      // both revisers act on the pre-event state
      const Action a1 = revise(pop2);
      const Action a2 = revise(pop1);
      const std::uint8_t h1 = a1 == Action::Hawk ? 1 : 0;
      const std::uint8_t h2 = a2 == Action::Hawk ? 1 : 0;
      pop1.hawk_count += h1 - pop1.hawk[i1];
      pop2.hawk_count += h2 - pop2.hawk[i2];
      pop1.hawk[i1] = h1;
      pop2.hawk[i2] = h2;
    }
    out.rows.push_back({block, pop1.share(), pop2.share()});
  }
  out.terminal = State(pop1.share(), pop2.share());
  return out;
}

std::vector<AbmSeries> run_abm_replicates(const AbmConfig& config, int replicates,
                                          std::uint64_t master_seed) {
  std::vector<AbmSeries> out;
  out.reserve(replicates);
  for (int r = 0; r < replicates; ++r) {
    AbmConfig cfg = config;
    cfg.seed = derive_seed(master_seed, static_cast<std::uint64_t>(r));
    out.push_back(run_abm(cfg));
  }
  return out;
}

DeviationReport compare_to_mean_field(const AbmSeries& series, const TrajectoryResult& trajectory,
                                      Real delta) {
  DeviationReport rep{0.0, 0.0};
  std::size_t ti = 0;
  for (const auto& row : series.rows) {
    const Real t = static_cast<Real>(row.block) / delta;
    while (ti + 1 < trajectory.path.size() && trajectory.path[ti + 1].first <= t) ++ti;
    const State& det = trajectory.path[ti].second;
    const Real dev = std::max(std::abs(det[0] - row.p1_hat), std::abs(det[1] - row.p2_hat));
    rep.sup_deviation = std::max(rep.sup_deviation, dev);
    rep.terminal_deviation = dev;
  }
  return rep;
}

}  // namespace hawkdove
