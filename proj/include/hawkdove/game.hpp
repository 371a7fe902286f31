#ifndef HAWKDOVE_GAME_HPP
#define HAWKDOVE_GAME_HPP

#include <stdexcept>
#include <utility>

#include "hawkdove/types.hpp"

namespace hawkdove {

enum class GameMode : std::uint8_t { Strict, Extended };

// Generalized hawk-dove game. u(h,h)=0, u(d,d)=1, u(h,d)=1+g, u(d,h)=1-l.
// Strict mode requires g,l in (0,1); extended mode allows g>0, l<1, g+l>0.
class Game {
 public:
  Game(Real g, Real l, GameMode mode = GameMode::Strict) : g_(g), l_(l), mode_(mode) {
    if (mode == GameMode::Strict) {
      if (!(g > 0.0 && g < 1.0 && l > 0.0 && l < 1.0))
        throw std::invalid_argument("Game: strict mode requires g,l in (0,1)");
    } else {
      if (!(g > 0.0 && l < 1.0 && g + l > 0.0))
        throw std::invalid_argument("Game: extended mode requires g>0, l<1, g+l>0");
    }
  }

  Real g() const { return g_; }
  Real l() const { return l_; }
  GameMode mode() const { return mode_; }

  // Hawk share at which a revising agent is exactly indifferent: g/(1+g-l).
  Real indifference_share() const { return g_ / (1.0 + g_ - l_); }

 private:
  Real g_, l_;
  GameMode mode_;
};

inline Real payoff(const Game& game, Action own, Action opp) {
  if (own == Action::Hawk) return opp == Action::Hawk ? 0.0 : 1.0 + game.g();
  return opp == Action::Hawk ? 1.0 - game.l() : 1.0;
}

// Bilinear extension of u to population states.
inline Real mixed_payoff(const Game& game, Real p_own, Real p_opp) {
  const Real g = game.g(), l = game.l();
  return p_own * (1.0 - p_opp) * (1.0 + g) + (1.0 - p_own) * p_opp * (1.0 - l) +
         (1.0 - p_own) * (1.0 - p_opp);
}

struct MixedNash {
  Real hawk_probability;
  Real expected_payoff;
};

inline MixedNash mixed_nash(const Game& game) {
  const Real g = game.g(), l = game.l();
  const Real denom = 1.0 + g - l;  // > 0 in both modes
  return {g / denom, (1.0 + g) * (1.0 - l) / denom};
}

}  // namespace hawkdove

#endif
