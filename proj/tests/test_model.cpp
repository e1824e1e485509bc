// Copyright 2026 The netneq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <limits>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "netneq/model.hpp"
#include "netneq/tolerance.hpp"
#include "netneq/verify.hpp"

using namespace netneq;

TEST_CASE("validate accepts the no-equilibrium instance") {
  CHECK_NOTHROW(validate(fixtures::no_spne()));
}

TEST_CASE("validate rejects degenerate parameters") {
  MarketParams p;
  p.q_p = p.q_f = 1.0;
  CHECK_THROWS_WITH_AS(validate(p), "q_p must exceed q_f", InvalidParams);
  p = MarketParams{};
  p.t_N = 0.0;
  CHECK_THROWS_WITH_AS(validate(p), "t_N must be positive", InvalidParams);
  p = MarketParams{};
  p.t_NoN = -1.0;
  CHECK_THROWS_AS(validate(p), InvalidParams);
  p = MarketParams{};
  p.kappa_ad = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_WITH_AS(validate(p), "kappa_ad must be finite", InvalidParams);
  p = MarketParams{};
  p.kappa_u = 0.0;
  p.kappa_ad = 0.0;
  p.c = 0.0;
  CHECK_NOTHROW(validate(p));
}

TEST_CASE("ISP payoffs") {
  const MarketParams p = fixtures::a_instance();
  MarketSplit s{0.3, 0.3, 0.7};
  QualityDecision q{1.0, 1.0, 0, Region::F_I};

  SUBCASE("price at cost earns nothing") {
    CHECK(payoff_isps(p, {1.0, 3.0, 0.0}, s, q).first == 0.0);
  }
  SUBCASE("drive-out profile") {
    const MarketSplit all_non{0.0, 0.0, 1.0};
    const QualityDecision prem{0.0, 1.5, 1, Region::F_L};
    const auto [pi_N, pi_NoN] = payoff_isps(p, {1.0, 2.0, 1.0 / 6}, all_non, prem);
    CHECK(pi_N == 0.0);
    CHECK(pi_NoN == doctest::Approx(1.25).epsilon(1e-12));
  }
  SUBCASE("side payment only counts with z = 1") {
    const MarketSplit s2{0.6, 0.6, 0.4};
    CHECK(payoff_isps(p, {1.5, 2.0, 5.0}, s2, q).second == doctest::Approx(0.4));
  }
}

TEST_CASE("CP payoff") {
  const MarketParams p = fixtures::a_instance();
  SUBCASE("equal free qualities") {
    for (double n : {0.0, 0.25, 0.5, 1.0}) {
      const MarketSplit s{n, n, 1.0 - n};
      CHECK(payoff_cp(p, s, {1.0, 1.0, 0, Region::F_I}, 0.3) == doctest::Approx(0.5));
    }
  }
  SUBCASE("premium on NoN") {
    const MarketSplit s{0.0, 0.0, 1.0};
    CHECK(payoff_cp(p, s, {0.0, 1.5, 1, Region::F_L}, 1.0 / 6) == doctest::Approx(0.5));
  }
  SUBCASE("no content") {
    const MarketSplit s{0.5, 0.5, 0.5};
    CHECK(payoff_cp(p, s, {0.0, 0.0, 0, Region::F_I}, 0.0) == 0.0);
  }
}

TEST_CASE("property: free payoff ignores the split, ISP payoffs are linear in price") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const MarketParams p = random_params(rng);
    const double q = p.q_f * u(rng);
    const double a = u(rng), b = u(rng);
    const QualityDecision qd{q, q, 0, Region::F_I};
    CHECK(near(payoff_cp(p, {a, a, 1 - a}, qd, 0.0), payoff_cp(p, {b, b, 1 - b}, qd, 0.0)));

    const MarketSplit s{a, a, 1 - a};
    const double p1 = p.c + 3 * u(rng), p2 = p.c + 3 * u(rng);
    const auto lo = payoff_isps(p, {p1, p2, 0.1}, s, qd);
    const auto hi = payoff_isps(p, {p1 + 1, p2 + 1, 0.1}, s, qd);
    const auto mid = payoff_isps(p, {p1 + 0.5, p2 + 0.5, 0.1}, s, qd);
    CHECK(near(mid.first, 0.5 * (lo.first + hi.first)));
    CHECK(near(mid.second, 0.5 * (lo.second + hi.second)));
  }
}
