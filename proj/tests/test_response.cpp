#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hawkdove/response.hpp"
#include "oracles.hpp"

using namespace hawkdove;

namespace {

bool coeffs_match(const ResponseFunction& f, std::initializer_list<double> expect) {
  if (f.coefficients().size() != static_cast<Eigen::Index>(expect.size())) return false;
  Eigen::Index i = 0;
  for (double e : expect) {
    if (std::abs(f.coefficients()[i++] - e) > 1e-12) return false;
  }
  return true;
}

Real fixed_point(const ResponseFunction& f) {
  Real lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const Real mid = 0.5 * (lo + hi);
    (f(mid) - mid > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("action response polynomials") {
  // sample size 1: w(p) = 1 - p for any game
  for (Real g : {0.1, 0.5, 0.9}) {
    const auto f = build_action_response(Game(g, 0.4), SampleDistribution::degenerate(1));
    CHECK(coeffs_match(f, {1.0, -1.0}));
  }
  // g=l=0.25, k=3: hawk only on a hawkless sample -> (1-p)^3
  const Game q(0.25, 0.25);
  const auto f3 = build_action_response(q, SampleDistribution::degenerate(3));
  CHECK(coeffs_match(f3, {1.0, -3.0, 3.0, -1.0}));
  // mixture 0.75*(1-p) + 0.25*(1-p)^3
  const auto fm = build_action_response(q, SampleDistribution::parse("1:0.75,3:0.25"));
  CHECK(coeffs_match(fm, {1.0, -1.5, 0.75, -0.25}));
}

TEST_CASE("action-sampling cutoff honors the tie rule") {
  const Game q(0.25, 0.25);  // k=4 puts the tie exactly at one hawk
  CHECK(action_sampling_cutoff(q, TieRule::DoveFavoring, 4) == 0);
  CHECK(action_sampling_cutoff(q, TieRule::HawkFavoring, 4) == 1);
  CHECK(action_sampling_cutoff(q, TieRule::DoveFavoring, 3) == 0);
}

TEST_CASE("payoff response polynomials") {
  const Game q(0.25, 0.25);
  const auto f1 = build_payoff_response(q, SampleDistribution::degenerate(1));
  CHECK(coeffs_match(f1, {1.0, -1.0}));
  // k=3: hawk iff X=0, or X=1 and Y=3 -> (1-p)^3 + 3 p^4 (1-p)^2
  const auto f3 = build_payoff_response(q, SampleDistribution::degenerate(3));
  CHECK(coeffs_match(f3, {1.0, -3.0, 3.0, -1.0, 3.0, -6.0, 3.0}));
}

TEST_CASE("limit payoff polynomials") {
  const auto f1 = build_limit_payoff_response(1);
  CHECK(coeffs_match(f1, {1.0, -1.0}));
  CHECK(fixed_point(f1) == doctest::Approx(0.5).epsilon(1e-12));

  const auto f2 = build_limit_payoff_response(2);
  CHECK(coeffs_match(f2, {1.0, -2.0, 5.0, -6.0, 2.0}));
  const Real p2 = fixed_point(f2);
  CHECK(std::abs(p2 - 0.579) < 5e-4);
  CHECK(std::abs(std::abs(f2.slope(p2)) - 0.690) < 5e-4);
  // exact values frozen from integer-arithmetic evaluation
  CHECK(p2 == doctest::Approx(0.5786160903).epsilon(1e-9));
  CHECK(std::abs(f2.slope(p2)) == doctest::Approx(0.6904280310).epsilon(1e-9));

  CHECK_THROWS_AS(build_limit_payoff_response(0), std::invalid_argument);
  CHECK_THROWS_AS(build_limit_payoff_response(65), std::invalid_argument);
}

TEST_CASE("endpoint values and strict decrease") {
  std::vector<ResponseFunction> fs;
  const Game g1(0.25, 0.25), g2(0.7, 0.2), g3(0.04, 0.04);
  fs.push_back(build_action_response(g1, SampleDistribution::parse("1:0.75,3:0.25")));
  fs.push_back(build_action_response(g2, SampleDistribution::uniform(7)));
  fs.push_back(build_action_response(g3, SampleDistribution::parse("2:0.3,20:0.7")));
  fs.push_back(build_payoff_response(g1, SampleDistribution::degenerate(3)));
  fs.push_back(build_payoff_response(g2, SampleDistribution::biased1(0.4)));
  fs.push_back(build_limit_payoff_response(20));
  fs.push_back(build_action_response(g1, SampleDistribution::degenerate(1),
                                     TieRule::HawkFavoring));
  for (const auto& f : fs) {
    CHECK(std::abs(f(0.0) - 1.0) <= 1e-12);
    CHECK(std::abs(f(1.0)) <= 1e-12);
    Real prev = f(0.0);
    for (int i = 1; i <= 1000; ++i) {
      const Real v = f(i * 1e-3);
      CHECK(v < prev);
      prev = v;
      if (i < 1000) CHECK(f.slope(i * 1e-3) < 0.0);
    }
  }
}

TEST_CASE("polynomial evaluation matches exhaustive enumeration") {
  for (Real g : {0.1, 0.35, 0.65, 0.9}) {
    for (Real l : {0.15, 0.5, 0.85}) {
      const Game game(g, l);
      for (int k = 1; k <= 8; k += 2) {
        const auto theta = SampleDistribution::degenerate(k);
        const auto fa = build_action_response(game, theta);
        const auto fp = build_payoff_response(game, theta);
        for (int i = 0; i <= 100; ++i) {
          const Real p = i / 100.0;
          CHECK(std::abs(fa(p) - oracles::enum_action_response(game, TieRule::DoveFavoring,
                                                               theta, p)) < 1e-10);
          CHECK(std::abs(fp(p) - oracles::enum_payoff_response(game, TieRule::DoveFavoring,
                                                               theta, p)) < 1e-10);
        }
      }
    }
  }
}

TEST_CASE("derivative closed form and finite differences") {
  const Game q(0.25, 0.25);
  const auto f3 = build_action_response(q, SampleDistribution::degenerate(3));
  CHECK(f3(0.5) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(f3.slope(0.5) == doctest::Approx(-0.75).epsilon(1e-13));

  const auto f1 = build_action_response(q, SampleDistribution::degenerate(1));
  for (Real p : {0.0, 0.3, 0.77, 1.0}) CHECK(f1.slope(p) == doctest::Approx(-1.0));

  // homogeneous action sampling, k=7: |w'(p)| = k * Pr(Bin(k-1,p) = m)
  const int k = 7;
  for (int m = 0; m <= 6; ++m) {
    const Real a = (m + 0.5) / k;
    const Game game(a, a);  // indifference share = a, cutoff = m
    REQUIRE(action_sampling_cutoff(game, TieRule::DoveFavoring, k) == m);
    const auto f = build_action_response(game, SampleDistribution::degenerate(k));
    for (Real p : {0.2, 0.5, 0.8}) {
      const Real closed = k * oracles::binom_pmf(k - 1, m, p);
      CHECK(std::abs(f.slope(p)) == doctest::Approx(closed).epsilon(1e-11));
    }
  }

  // central differences
  const auto fmix = build_payoff_response(Game(0.6, 0.3), SampleDistribution::uniform(5));
  const Real h = 1e-6;
  for (int i = 1; i <= 99; ++i) {
    const Real p = i / 100.0;
    const Real fd = (fmix(p + h) - fmix(p - h)) / (2.0 * h);
    CHECK(std::abs(fmix.slope(p) - fd) <= 1e-5);
  }
}

TEST_CASE("corner slopes equal bounded expectations") {
  const auto theta = SampleDistribution::biased1(0.5);
  for (Real g : {0.15, 0.55, 0.95}) {
    const Game game(g, g);
    for (DynamicsKind kind : {DynamicsKind::ActionSampling, DynamicsKind::PayoffSampling}) {
      const auto f = kind == DynamicsKind::ActionSampling
                         ? build_action_response(game, theta)
                         : build_payoff_response(game, theta);
      const auto th = thresholds(game, kind);
      CHECK(std::abs(std::abs(f.slope(0.0)) -
                     bounded_expectation(theta, th.m_d, Strictness::Weak)) < 1e-9);
      CHECK(std::abs(std::abs(f.slope(1.0)) -
                     bounded_expectation(theta, th.m_h, Strictness::Strict)) < 1e-9);
    }
  }
  // hawk-favoring ties swap strict and weak
  const Game game(0.5, 0.5);  // thresholds land exactly on integers
  const auto fh =
      build_action_response(game, SampleDistribution::uniform(4), TieRule::HawkFavoring);
  const auto th = thresholds(game, DynamicsKind::ActionSampling);
  const auto theta4 = SampleDistribution::uniform(4);
  CHECK(std::abs(std::abs(fh.slope(0.0)) -
                 bounded_expectation(theta4, th.m_d, Strictness::Strict)) < 1e-9);
  CHECK(std::abs(std::abs(fh.slope(1.0)) -
                 bounded_expectation(theta4, th.m_h, Strictness::Weak)) < 1e-9);
}

TEST_CASE("reflection symmetry of homogeneous action components") {
  // w_{k,k-m-1}(1-p) = 1 - w_{k,m}(p)
  const int k = 7;
  for (int m = 0; m <= 6; ++m) {
    const Real a1 = (m + 0.5) / k, a2 = (k - m - 1 + 0.5) / k;
    const auto f_m = build_action_response(Game(a1, a1), SampleDistribution::degenerate(k));
    const auto f_r = build_action_response(Game(a2, a2), SampleDistribution::degenerate(k));
    for (int i = 0; i <= 100; ++i) {
      const Real p = i / 100.0;
      CHECK(std::abs(f_r(1.0 - p) - (1.0 - f_m(p))) < 1e-12);
    }
  }
}

TEST_CASE("inverse by bisection") {
  const Game q(0.25, 0.25);
  const auto f1 = build_action_response(q, SampleDistribution::degenerate(1));
  CHECK(inverse(f1, 0.3) == doctest::Approx(0.7).epsilon(1e-11));
  const auto f3 = build_action_response(q, SampleDistribution::degenerate(3));
  CHECK(inverse(f3, 0.125) == doctest::Approx(0.5).epsilon(1e-11));
  const auto f2 = build_limit_payoff_response(2);
  const Real p2 = fixed_point(f2);
  CHECK(std::abs(inverse(f2, p2) - p2) < 1e-9);
  CHECK(inverse(f1, 1.0) == doctest::Approx(0.0));
  CHECK(inverse(f1, 0.0) == doctest::Approx(1.0));
  CHECK_THROWS_AS(inverse(f1, 1.5), std::invalid_argument);
}

TEST_CASE("coefficient dump is a JSON array, lowest degree first") {
  const auto f = build_action_response(Game(0.25, 0.25), SampleDistribution::degenerate(3));
  CHECK(f.coefficients_json() == "[1,-3,3,-1]");
}

TEST_CASE("oversized supports are rejected") {
  std::map<int, Real> atoms{{1, 0.5}, {65, 0.5}};
  const SampleDistribution theta(atoms);
  CHECK_THROWS_AS(build_action_response(Game(0.5, 0.5), theta), std::invalid_argument);
  CHECK_THROWS_AS(build_payoff_response(Game(0.5, 0.5), theta), std::invalid_argument);
}
