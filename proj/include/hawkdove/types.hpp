#ifndef HAWKDOVE_TYPES_HPP
#define HAWKDOVE_TYPES_HPP

#include <Eigen/Core>
#include <cmath>
#include <cstdint>
#include <string>

namespace hawkdove {

using Real = double;

// Population state: hawk share in population 1 and 2, both in [0,1].
using State = Eigen::Vector2d;

enum class Action : std::uint8_t { Hawk, Dove };

enum class DynamicsKind : std::uint8_t { ActionSampling, PayoffSampling };

// Tie resolution for a revising agent who is exactly indifferent.
enum class TieRule : std::uint8_t { DoveFavoring, HawkFavoring };

inline bool is_interior(const State& s) {
  return s[0] > 0.0 && s[0] < 1.0 && s[1] > 0.0 && s[1] < 1.0;
}

inline bool is_symmetric(const State& s, Real tol = 0.0) {
  return std::abs(s[0] - s[1]) <= tol;
}

inline bool in_unit_square(const State& s) {
  return s[0] >= 0.0 && s[0] <= 1.0 && s[1] >= 0.0 && s[1] <= 1.0;
}

inline const char* to_string(Action a) { return a == Action::Hawk ? "h" : "d"; }

inline const char* to_string(DynamicsKind k) {
  return k == DynamicsKind::ActionSampling ? "action" : "payoff";
}

inline const char* to_string(TieRule t) {
  return t == TieRule::DoveFavoring ? "dove" : "hawk";
}

}  // namespace hawkdove

#endif
