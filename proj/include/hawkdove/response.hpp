#ifndef HAWKDOVE_RESPONSE_HPP
#define HAWKDOVE_RESPONSE_HPP

#include <Eigen/Core>
#include <optional>
#include <string>

#include "hawkdove/game.hpp"
#include "hawkdove/sampling.hpp"
#include "hawkdove/types.hpp"

namespace hawkdove {

// Largest admissible sample size: keeps every polynomial at degree <= 128 and
// bounds the conditioning loss of the monomial basis.
inline constexpr int kMaxSampleSize = 64;

// Monomial-basis polynomial (lowest degree first) with a tail vector holding
// the rounding residue of theta-weighted coefficient accumulation. The head
// alone is the 64-bit representation; evaluation folds the tail back in so
// that endpoint cancellations (w(1) = 0, corner slopes) hold to ~1e-15.
struct PolyPair {
  Eigen::VectorXd head;
  Eigen::VectorXd tail;  // may be empty (exact integer coefficients)

  Real eval(Real x) const;
};

// Response function w: [0,1] -> [0,1], the probability that a revising agent
// adopts hawk when the opposing population's hawk share is p. Immutable after
// construction; all evaluations are pure and reentrant.
class ResponseFunction {
 public:
  ResponseFunction(PolyPair value, DynamicsKind kind, TieRule tie,
                   std::optional<Game> game = std::nullopt,
                   std::optional<SampleDistribution> theta = std::nullopt);
  ResponseFunction(Eigen::VectorXd coefficients, DynamicsKind kind, TieRule tie,
                   std::optional<Game> game = std::nullopt,
                   std::optional<SampleDistribution> theta = std::nullopt);

  Real operator()(Real p) const;   // compensated Horner
  Real slope(Real p) const;        // formal derivative, compensated Horner

  const Eigen::VectorXd& coefficients() const { return value_.head; }
  int degree() const { return static_cast<int>(value_.head.size()) - 1; }
  DynamicsKind kind() const { return kind_; }
  TieRule tie() const { return tie_; }
  const std::optional<Game>& game() const { return game_; }
  const std::optional<SampleDistribution>& theta() const { return theta_; }

  // JSON array of coefficients, lowest degree first.
  std::string coefficients_json() const;

 private:
  PolyPair value_;
  PolyPair deriv_;
  DynamicsKind kind_;
  TieRule tie_;
  std::optional<Game> game_;
  std::optional<SampleDistribution> theta_;
};

// Action-sampling response, Sum_k theta(k) * Pr(X_k(p)/k < g/(1+g-l)) with
// X_k ~ Bin(k,p); ties resolved by `tie`. Coefficients are assembled from
// exact integer expansions per sample size.
ResponseFunction build_action_response(const Game& game, const SampleDistribution& theta,
                                       TieRule tie = TieRule::DoveFavoring);

// Payoff-sampling response, Sum_k theta(k) * Pr((1+g)X_k < gk + lY_k) with
// X_k, Y_k iid Bin(k,p), by exact enumeration over (X,Y).
ResponseFunction build_payoff_response(const Game& game, const SampleDistribution& theta,
                                       TieRule tie = TieRule::DoveFavoring);

// Large-gain/large-loss limit of the payoff-sampling response for a
// homogeneous sample size k: w_k(p) = Pr(2 X_k(p) - Y_k(p) < k).
ResponseFunction build_limit_payoff_response(int k);

// The number of hawk observations (inclusive cutoff) below which hawk is the
// best reply to a size-k action sample.
int action_sampling_cutoff(const Game& game, TieRule tie, int k);

inline Real evaluate(const ResponseFunction& f, Real p) { return f(p); }
inline Real derivative(const ResponseFunction& f, Real p) { return f.slope(p); }

// Solves f(p) = q by bisection; f must be strictly decreasing on [0,1].
// Returns p with |f(p) - q| <= tol.
Real inverse(const ResponseFunction& f, Real q, Real tol = 1e-12);

}  // namespace hawkdove

#endif
