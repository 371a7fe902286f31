// Test-only oracles, kept independent of the polynomial construction and
// evaluation paths they are used to check.
#ifndef HAWKDOVE_TESTS_ORACLES_HPP
#define HAWKDOVE_TESTS_ORACLES_HPP

#include <cmath>
#include <vector>

#include "hawkdove/game.hpp"
#include "hawkdove/sampling.hpp"

namespace oracles {

using hawkdove::Action;
using hawkdove::Game;
using hawkdove::Real;
using hawkdove::SampleDistribution;
using hawkdove::TieRule;

inline double choose(int n, int r) {
  if (r < 0 || r > n) return 0.0;
  double c = 1.0;
  for (int i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

inline double binom_pmf(int k, int i, double p) {
  return choose(k, i) * std::pow(p, i) * std::pow(1.0 - p, k - i);
}

// Direct enumeration of Sum_k theta(k) * Pr(best reply to the sample is hawk).
inline double enum_action_response(const Game& game, TieRule tie,
                                   const SampleDistribution& theta, double p) {
  double total = 0.0;
  for (const auto& atom : theta.atoms()) {
    double inner = 0.0;
    for (int i = 0; i <= atom.k; ++i)
      if (hawkdove::action_best_reply(game, tie, i, atom.k) == Action::Hawk)
        inner += binom_pmf(atom.k, i, p);
    total += atom.mass * inner;
  }
  return total;
}

inline double enum_payoff_response(const Game& game, TieRule tie,
                                   const SampleDistribution& theta, double p) {
  double total = 0.0;
  for (const auto& atom : theta.atoms()) {
    const int k = atom.k;
    std::vector<double> pmf(k + 1);
    for (int i = 0; i <= k; ++i) pmf[i] = binom_pmf(k, i, p);
    double inner = 0.0;
    for (int x = 0; x <= k; ++x)
      for (int y = 0; y <= k; ++y)
        if (hawkdove::payoff_best_reply(game, tie, x, y, k) == Action::Hawk)
          inner += pmf[x] * pmf[y];
    total += atom.mass * inner;
  }
  return total;
}

inline double enum_limit_response(int k, double p) {
  std::vector<double> pmf(k + 1);
  for (int i = 0; i <= k; ++i) pmf[i] = binom_pmf(k, i, p);
  double total = 0.0;
  for (int x = 0; x <= k; ++x)
    for (int y = 0; y <= k; ++y)
      if (2 * x - y < k) total += pmf[x] * pmf[y];
  return total;
}

}  // namespace oracles

#endif
