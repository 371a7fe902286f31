#ifndef HAWKDOVE_SAMPLING_HPP
#define HAWKDOVE_SAMPLING_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "hawkdove/game.hpp"
#include "hawkdove/types.hpp"

namespace hawkdove {

// Finite distribution over positive-integer sample sizes.
// Atoms are kept sorted by k; masses are positive and sum to 1 within 1e-12.
class SampleDistribution {
 public:
  struct Atom {
    int k;
    Real mass;
  };

  explicit SampleDistribution(const std::map<int, Real>& atoms);

  static SampleDistribution degenerate(int k);
  static SampleDistribution uniform(int k);  // uniform on {1,...,k}
  // Section-6 1-biased family: mass (1-q)/10 + q on size 1, (1-q)/10 on 2..10.
  static SampleDistribution biased1(Real q);

  // Literal "k1:m1,k2:m2,..." or family "degenerate:k" / "uniform:k" / "biased1:q".
  static SampleDistribution parse(const std::string& text);

  const std::vector<Atom>& atoms() const { return atoms_; }
  int max_support() const { return atoms_.back().k; }
  Real mass(int k) const;
  Real mean() const;
  std::string to_string() const;

 private:
  std::vector<Atom> atoms_;
};

enum class Strictness : std::uint8_t { Strict, Weak };

// m-bounded expectation: sum of theta(k)*k over integer k < m (strict) or k <= m (weak).
inline Real bounded_expectation(const SampleDistribution& theta, Real m, Strictness s) {
  Real total = 0.0;
  for (const auto& a : theta.atoms()) {
    const bool in = (s == Strictness::Strict) ? (a.k < m) : (a.k <= m);
    if (in) total += a.mass * a.k;
  }
  return total;
}

// Maximal sample sizes at which a single rare action in an otherwise uniform
// sample flips a reviser's choice.
struct Thresholds {
  Real m_h;
  Real m_d;
};

inline Thresholds thresholds(const Game& game, DynamicsKind kind) {
  const Real g = game.g(), l = game.l();
  if (kind == DynamicsKind::ActionSampling)
    return {1.0 + g / (1.0 - l), 1.0 + (1.0 - l) / g};
  return {(1.0 + g) / (1.0 - l), (1.0 + g) / g};
}

// Empirical best reply to a sample of k observed opponent actions.
// Hawk is chosen iff hawks/k < g/(1+g-l); equality resolved by the tie rule.
inline Action action_best_reply(const Game& game, TieRule tie, int hawks_in_sample, int k) {
  if (k < 1 || hawks_in_sample < 0 || hawks_in_sample > k)
    throw std::invalid_argument("action_best_reply: need 0 <= hawks <= k, k >= 1");
  // Compare hawks/k with g/(1+g-l) in cross-multiplied form; all terms exact
  // in double for the integer side, so ties at integer thresholds are exact.
  const Real lhs = static_cast<Real>(hawks_in_sample) * (1.0 + game.g() - game.l());
  const Real rhs = game.g() * static_cast<Real>(k);
  if (lhs < rhs) return Action::Hawk;
  if (lhs > rhs) return Action::Dove;
  return tie == TieRule::DoveFavoring ? Action::Dove : Action::Hawk;
}

// Best reply under payoff sampling: hawk tested against k opponents (X hawks
// seen), dove against k fresh opponents (Y hawks seen). Hawk is chosen iff
// (1+g)X < gk + lY; equality resolved by the tie rule.
inline Action payoff_best_reply(const Game& game, TieRule tie, int hawks_in_h_sample,
                                int hawks_in_d_sample, int k) {
  if (k < 1 || hawks_in_h_sample < 0 || hawks_in_h_sample > k || hawks_in_d_sample < 0 ||
      hawks_in_d_sample > k)
    throw std::invalid_argument("payoff_best_reply: need counts in [0,k], k >= 1");
  const Real lhs = (1.0 + game.g()) * static_cast<Real>(hawks_in_h_sample);
  const Real rhs =
      game.g() * static_cast<Real>(k) + game.l() * static_cast<Real>(hawks_in_d_sample);
  if (lhs < rhs) return Action::Hawk;
  if (lhs > rhs) return Action::Dove;
  return tie == TieRule::DoveFavoring ? Action::Dove : Action::Hawk;
}

// Whether a single occurrence of `rare` in an otherwise-common sample changes
// the adopted action near the corresponding pure state.
inline bool single_deviation_flips(const Game& game, DynamicsKind kind, TieRule tie, int k,
                                   Action rare) {
  if (k < 1) throw std::invalid_argument("single_deviation_flips: k >= 1");
  if (kind == DynamicsKind::ActionSampling) {
    if (rare == Action::Dove) return action_best_reply(game, tie, k - 1, k) == Action::Hawk;
    return action_best_reply(game, tie, 1, k) == Action::Dove;
  }
  if (rare == Action::Dove)
    return payoff_best_reply(game, tie, k - 1, k, k) == Action::Hawk;
  return payoff_best_reply(game, tie, 1, 0, k) == Action::Dove;
}

}  // namespace hawkdove

#endif
