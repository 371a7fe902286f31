#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hawkdove/game.hpp"

using namespace hawkdove;

TEST_CASE("payoff matrix") {
  const Game g(0.25, 0.25);
  CHECK(payoff(g, Action::Hawk, Action::Dove) == doctest::Approx(1.25).epsilon(1e-15));
  CHECK(payoff(g, Action::Hawk, Action::Hawk) == 0.0);
  CHECK(payoff(g, Action::Dove, Action::Dove) == 1.0);
  const Game g2(0.5, 0.3);
  CHECK(payoff(g2, Action::Dove, Action::Hawk) == doctest::Approx(0.7).epsilon(1e-15));
}

TEST_CASE("mixed payoff") {
  CHECK(mixed_payoff(Game(0.25, 0.25), 1.0, 0.5) == doctest::Approx(0.625).epsilon(1e-15));
  CHECK(mixed_payoff(Game(0.3, 0.7), 0.0, 0.0) == 1.0);
  CHECK(mixed_payoff(Game(0.5, 0.5), 0.5, 0.5) == doctest::Approx(0.75).epsilon(1e-15));
}

TEST_CASE("mixed payoff is bilinear") {
  const Game g(0.35, 0.6);
  for (int i = 0; i <= 4; ++i) {
    const Real lam = i / 4.0;
    for (Real p : {0.0, 0.3, 1.0})
      for (Real q : {0.1, 0.9})
        for (Real r : {0.0, 0.5, 1.0}) {
          const Real lhs = mixed_payoff(g, lam * p + (1 - lam) * q, r);
          const Real rhs = lam * mixed_payoff(g, p, r) + (1 - lam) * mixed_payoff(g, q, r);
          CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
        }
  }
}

TEST_CASE("mixed nash") {
  const auto n1 = mixed_nash(Game(0.5, 0.5));
  CHECK(n1.hawk_probability == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(n1.expected_payoff == doctest::Approx(0.75).epsilon(1e-15));

  for (Real g : {0.1, 0.45, 0.8}) {
    const auto n = mixed_nash(Game(g, g));
    CHECK(n.hawk_probability == doctest::Approx(g).epsilon(1e-14));
    CHECK(n.expected_payoff == doctest::Approx((1 + g) * (1 - g)).epsilon(1e-14));
  }

  const auto n2 = mixed_nash(Game(0.25, 0.75));
  CHECK(n2.hawk_probability == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(n2.expected_payoff == doctest::Approx(0.625).epsilon(1e-14));
}

TEST_CASE("indifference at the mixed nash share") {
  for (int gi = 1; gi <= 19; gi += 3) {
    for (int li = 1; li <= 19; li += 3) {
      const Game g(gi / 20.0, li / 20.0);
      const Real p = mixed_nash(g).hawk_probability;
      CHECK(std::abs(mixed_payoff(g, 1.0, p) - mixed_payoff(g, 0.0, p)) < 1e-12);
    }
  }
}

TEST_CASE("strict-mode nash payoff below 1 on the grid") {
  for (int gi = 1; gi <= 19; ++gi)
    for (int li = 1; li <= 19; ++li)
      CHECK(mixed_nash(Game(gi * 0.05, li * 0.05)).expected_payoff < 1.0);
}

TEST_CASE("validation modes") {
  CHECK_THROWS_AS(Game(1.2, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(Game(0.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Game(0.0, 0.5), std::invalid_argument);
  CHECK_NOTHROW(Game(1.2, 0.5, GameMode::Extended));
  CHECK_NOTHROW(Game(0.5, -0.2, GameMode::Extended));
  CHECK_THROWS_AS(Game(0.1, -0.2, GameMode::Extended), std::invalid_argument);
  CHECK_THROWS_AS(Game(0.5, 1.2, GameMode::Extended), std::invalid_argument);
}

TEST_CASE("state predicates") {
  CHECK(is_interior(State(0.2, 0.9)));
  CHECK_FALSE(is_interior(State(0.0, 0.5)));
  CHECK(is_symmetric(State(0.3, 0.3)));
  CHECK_FALSE(is_symmetric(State(0.3, 0.4)));
  CHECK(is_symmetric(State(0.3, 0.3 + 1e-10), 1e-9));
}
