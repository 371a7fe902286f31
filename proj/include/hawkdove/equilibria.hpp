#ifndef HAWKDOVE_EQUILIBRIA_HPP
#define HAWKDOVE_EQUILIBRIA_HPP

#include <array>
#include <string>
#include <vector>

#include "hawkdove/response.hpp"

namespace hawkdove {

enum class StabilityLabel : std::uint8_t { AsymptoticallyStable, Unstable, Marginal, Continuum };

const char* to_string(StabilityLabel label);

// A rest point of the mean dynamics together with its linearization data.
// The Jacobian at (p1,p2) has eigenvalues -1 +- sqrt(w'(p1) * w'(p2)).
struct StationaryState {
  State location;
  Real slope_product;
  std::array<Real, 2> eigenvalues;
  StabilityLabel label;
};

struct StationarySet {
  std::vector<StationaryState> states;  // sorted by p1; a lone marker when continuum
  bool continuum = false;
  std::vector<std::string> warnings;
};

// All stationary states of the two-population dynamics driven by w. Every
// stationary (p1,p2) has p1 a root of G(p) = w(w(p)) - p and p2 = w(p1);
// roots are isolated by a sign scan over a 10,001-point grid plus bisection.
// (0,1) and (1,0) are always present. If G vanishes identically (w = 1-p),
// the whole curve p2 = w(p1) is stationary and a Continuum marker is returned.
StationarySet find_stationary_states(const ResponseFunction& f, Real tol = 1e-10);

// Fills in slope product, eigenvalues and label for a state that is already
// stationary within `residual_tol`; throws otherwise.
StationaryState classify(const ResponseFunction& f, const State& s, Real residual_tol = 1e-8);

enum class PureStability : std::uint8_t { Stable, Unstable, Boundary };

struct PureStabilityResult {
  PureStability label;
  Real product;  // E_{<m_h}(theta) * E_{<=m_d}(theta), strict/weak per tie rule
};

// Closed-form stability of the pure states (0,1) and (1,0): unstable iff the
// product of bounded expectations exceeds 1, stable iff below 1.
PureStabilityResult pure_state_stability(const Game& game, const SampleDistribution& theta,
                                         DynamicsKind kind, TieRule tie = TieRule::DoveFavoring);

// Standard-game (g = l) criterion for global convergence to a mixed state.
// Requires 1/g, 1/(1-g), (1+g)/g and (1+g)/(1-g) to be non-integer.
bool standard_game_mixed_test(Real g, const SampleDistribution& theta, DynamicsKind kind);

enum class Theorem1Verdict : std::uint8_t { GlobalMixed, PureReachable, Boundary };

const char* to_string(Theorem1Verdict v);

Theorem1Verdict theorem1_verdict(const Game& game, const SampleDistribution& theta,
                                 DynamicsKind kind, TieRule tie = TieRule::DoveFavoring);

// JSON report of a stationary-state set: [{p1,p2,slope_product,eigenvalues,label},...].
std::string to_json(const StationarySet& set);

}  // namespace hawkdove

#endif
