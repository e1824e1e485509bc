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

#include <algorithm>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "netneq/cp_response.hpp"
#include "netneq/oracle.hpp"
#include "netneq/tolerance.hpp"
#include "netneq/verify.hpp"

using namespace netneq;

TEST_CASE("thresholds") {
  const MarketParams p;
  const Thresholds th = thresholds(p, 0.8);
  CHECK(th.pt1 == doctest::Approx(1.0 / 6).epsilon(1e-12));
  CHECK(th.pt2 == doctest::Approx(0.5 * (0.85 - 2.0 / 3)).epsilon(1e-12));

  MarketParams close = p;
  close.q_p = close.q_f * (1 + 1e-9);
  const Thresholds tc = thresholds(close, 0.8);
  CHECK(std::abs(tc.pt1) < 1e-8);
  CHECK(std::abs(tc.pt3) < 1e-8);
}

TEST_CASE("free-quality response") {
  const MarketParams p;
  const QualityDecision even = cp_best_response_z0(p, 0.0);
  CHECK(even.q_N == p.q_f);
  CHECK(even.q_NoN == p.q_f);
  CHECK(even.z == 0);

  const QualityDecision to_n = cp_best_response_z0(p, p.t_N);
  CHECK(to_n.q_N == p.q_f);
  CHECK(to_n.q_NoN == 0.0);

  const QualityDecision to_non = cp_best_response_z0(p, -p.t_NoN);
  CHECK(to_non.q_N == 0.0);
  CHECK(to_non.q_NoN == p.q_f);
}

TEST_CASE("premium response") {
  const MarketParams p = fixtures::a_instance();
  const QualityDecision at = cp_best_response(p, 1.0, 1.0 / 6);
  CHECK(at.q_N == 0.0);
  CHECK(at.q_NoN == p.q_p);
  CHECK(at.z == 1);
  CHECK(at.region == Region::F_L);

  const QualityDecision above = cp_best_response(p, 1.0, 0.2);
  CHECK(above.q_N == p.q_f);
  CHECK(above.q_NoN == 0.0);
  CHECK(above.z == 0);

  const double far = p.t_N + p.kappa_u * p.q_p + 1.0;
  for (double pt : {-10.0, 0.0, 1.0 / 6}) CHECK(cp_best_response(p, far, pt).z == 0);
  CHECK(thresholds(p, far).band == GapBand::no_premium);
}

TEST_CASE("normalization clears a quality nobody sees") {
  const MarketParams p = fixtures::a_instance();
  const QualityDecision low = normalize_strategy(p, -0.2, p.q_f, p.q_p);
  CHECK(low.region == Region::F_L);
  CHECK(low.q_N == 0.0);
  CHECK(low.q_NoN == p.q_p);
  CHECK(low.z == 1);
  const QualityDecision high = normalize_strategy(p, 1.0, p.q_f, p.q_p);
  CHECK(high.region == Region::F_U);
  CHECK(high.q_N == p.q_f);
  CHECK(high.q_NoN == 0.0);
  CHECK(high.z == 0);
}

namespace {

const double kStrategies[5][2] = {{0, 1}, {1, 0}, {1, 1}, {0, 2}, {1, 2}};

double best_discrete(const MarketParams& p, double dp, double pt) {
  double best = -1e300;
  for (const auto& s : kStrategies) {
    const double qn = s[0] == 0 ? 0.0 : p.q_f;
    const double qnon = s[1] == 0 ? 0.0 : (s[1] == 1 ? p.q_f : p.q_p);
    best = std::max(best, cp_strategy_payoff(p, dp, normalize_strategy(p, dp, qn, qnon), pt));
  }
  return best;
}

}  // namespace

TEST_CASE("property: response attains the best of the five strategies") {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 20000; ++k) {
    const MarketParams p = random_params(rng);
    const double dp = random_gap(p, rng);
    const double pt = random_side_payment(p, dp, rng);
    const QualityDecision q = cp_best_response(p, dp, pt);
    const double v = cp_strategy_payoff(p, dp, q, pt);
    CHECK(near(v, best_discrete(p, dp, pt)));
    CHECK(near(v, oracle_cp(p, dp, pt).payoff));
    CHECK(ge(v, p.kappa_ad * p.q_f));
  }
}

TEST_CASE("property: pt2 and pt3 stay below pt1 while their share is feasible") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 10000; ++k) {
    const MarketParams p = random_params(rng);
    const double dp = random_gap(p, rng);
    const Thresholds th = thresholds(p, dp);
    const double T = p.t_sum();
    const double n2 = (p.t_N + p.kappa_u * p.q_p - dp) / T;
    const double n3 = (p.t_N + p.kappa_u * (p.q_p - p.q_f) - dp) / T;
    if (n2 <= 1.0) CHECK(le(th.pt2, th.pt1));
    if (n3 <= 1.0) CHECK(le(th.pt3, th.pt1));
  }
}

TEST_CASE("property: active threshold falls as q_f / q_p rises") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 5000; ++k) {
    MarketParams p = random_params(rng);
    const double dp = random_gap(p, rng);
    const Thresholds a = thresholds(p, dp);
    MarketParams q = p;
    q.q_f = p.q_f + (p.q_p - p.q_f) * 0.5 * u(rng);
    const Thresholds b = thresholds(q, dp);
    if (a.active == ActivePt::none || a.active != b.active) continue;
    CHECK(le(b.active_value, a.active_value));
  }
}
