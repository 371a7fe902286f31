#include "hawkdove/config.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hawkdove {

using nlohmann::json;

ResponseFunction AnalysisConfig::build_response() const {
  return dynamics == DynamicsKind::ActionSampling ? build_action_response(game, theta, tie)
                                                  : build_payoff_response(game, theta, tie);
}

AbmConfig AnalysisConfig::abm_config() const {
  AbmConfig cfg;
  cfg.population_size = abm_population;
  cfg.horizon = abm_horizon;
  cfg.seed = seed;
  cfg.game = game;
  cfg.theta = theta;
  cfg.kind = dynamics;
  cfg.tie = tie;
  if (start) cfg.start = *start;
  return cfg;
}

AnalysisConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  try {
    AnalysisConfig cfg;
    if (!j.contains("game") || !j["game"].contains("g") || !j["game"].contains("l"))
      throw ConfigError("config: game.g and game.l are required");
    const auto& jg = j["game"];
    GameMode mode = GameMode::Strict;
    if (jg.contains("mode")) {
      const std::string m = jg["mode"].get<std::string>();
      if (m == "strict")
        mode = GameMode::Strict;
      else if (m == "extended")
        mode = GameMode::Extended;
      else
        throw ConfigError("config: game.mode must be 'strict' or 'extended'");
    }
    cfg.game = Game(jg["g"].get<Real>(), jg["l"].get<Real>(), mode);

    if (!j.contains("theta")) throw ConfigError("config: theta is required");
    cfg.theta = SampleDistribution::parse(j["theta"].get<std::string>());

    if (j.contains("dynamics")) {
      const std::string d = j["dynamics"].get<std::string>();
      if (d == "action")
        cfg.dynamics = DynamicsKind::ActionSampling;
      else if (d == "payoff")
        cfg.dynamics = DynamicsKind::PayoffSampling;
      else
        throw ConfigError("config: dynamics must be 'action' or 'payoff'");
    }
    if (j.contains("tie")) {
      const std::string t = j["tie"].get<std::string>();
      if (t == "dove")
        cfg.tie = TieRule::DoveFavoring;
      else if (t == "hawk")
        cfg.tie = TieRule::HawkFavoring;
      else
        throw ConfigError("config: tie must be 'dove' or 'hawk'");
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("integrator")) {
      const auto& ji = j["integrator"];
      if (ji.contains("t_max")) cfg.integrator.t_max = ji["t_max"].get<Real>();
      if (ji.contains("tol")) cfg.integrator.converge_tol = ji["tol"].get<Real>();
      if (ji.contains("delta")) cfg.integrator.delta = ji["delta"].get<Real>();
      if (!(cfg.integrator.t_max > 0) || !(cfg.integrator.converge_tol > 0) ||
          !(cfg.integrator.delta > 0))
        throw ConfigError("config: integrator values must be positive");
    }
    if (j.contains("abm")) {
      const auto& ja = j["abm"];
      if (ja.contains("N")) cfg.abm_population = ja["N"].get<int>();
      if (ja.contains("horizon")) cfg.abm_horizon = ja["horizon"].get<int>();
      if (ja.contains("replicates")) cfg.abm_replicates = ja["replicates"].get<int>();
      if (cfg.abm_population < 2 || cfg.abm_horizon < 1 || cfg.abm_replicates < 1)
        throw ConfigError("config: abm values out of range");
    }
    if (j.contains("start")) {
      const auto& js = j["start"];
      if (!js.is_array() || js.size() != 2) throw ConfigError("config: start must be [p1,p2]");
      State s(js[0].get<Real>(), js[1].get<Real>());
      if (!in_unit_square(s)) throw ConfigError("config: start outside [0,1]^2");
      cfg.start = s;
    }
    if (j.contains("basins")) {
      const auto& jb = j["basins"];
      if (jb.contains("n")) cfg.basin_samples = jb["n"].get<long>();
      if (cfg.basin_samples < 1) throw ConfigError("config: basins.n must be >= 1");
    }
    return cfg;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

AnalysisConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace hawkdove
