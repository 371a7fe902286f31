#ifndef HAWKDOVE_CONFIG_HPP
#define HAWKDOVE_CONFIG_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "hawkdove/abm.hpp"
#include "hawkdove/flow.hpp"
#include "hawkdove/game.hpp"
#include "hawkdove/response.hpp"
#include "hawkdove/sampling.hpp"

namespace hawkdove {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One analysis instance, as described by the JSON config:
// {game:{g,l,mode}, theta:"...", dynamics:"action"|"payoff", tie:"dove"|"hawk",
//  seed, integrator:{t_max,tol}, abm:{N,horizon,replicates}, start:[p1,p2], basins:{n}}
struct AnalysisConfig {
  Game game{0.5, 0.5};
  SampleDistribution theta = SampleDistribution::degenerate(1);
  DynamicsKind dynamics = DynamicsKind::ActionSampling;
  TieRule tie = TieRule::DoveFavoring;
  std::uint64_t seed = 1;
  IntegrateOptions integrator;
  int abm_population = 1000;
  int abm_horizon = 200;
  int abm_replicates = 1;
  std::optional<State> start;
  long basin_samples = 400;

  ResponseFunction build_response() const;
  AbmConfig abm_config() const;
};

AnalysisConfig parse_config(const std::string& json_text);
AnalysisConfig load_config(const std::string& path);

}  // namespace hawkdove

#endif
