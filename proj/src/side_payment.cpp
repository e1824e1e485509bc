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

#include "netneq/side_payment.hpp"

#include <algorithm>

#include "netneq/market.hpp"
#include "netneq/tolerance.hpp"

namespace netneq {

NonNeutralPayoff isp_non_payoff_given_ptilde(const MarketParams& params,
                                             double p_N, double p_NoN,
                                             double p_tilde) {
  NonNeutralPayoff r;
  r.quality = cp_best_response(params, p_NoN - p_N, p_tilde);
  r.split = eu_split(params, p_N, p_NoN, r.quality.q_N, r.quality.q_NoN);
  r.z = r.quality.z;
  const PriceProfile prices{p_N, p_NoN, p_tilde};
  r.value = payoff_isps(params, prices, r.split, r.quality).second;
  return r;
}

double isp_non_payoff_z0(const MarketParams& params, double p_N, double p_NoN) {
  const QualityDecision q = cp_best_response_z0(params, p_NoN - p_N);
  const MarketSplit s = eu_split(params, p_N, p_NoN, q.q_N, q.q_NoN);
  return (p_NoN - params.c) * s.n_NoN;
}

double neutral_sentinel(const Thresholds& th) {
  return std::max({th.pt1, th.pt2, th.pt3}) + 1.0;
}

SidePaymentResult optimal_side_payment(const MarketParams& params, double p_N,
                                       double p_NoN) {
  SidePaymentResult r;
  const double dp = p_NoN - p_N;
  r.th = thresholds(params, dp);
  r.payoff_z0 = isp_non_payoff_z0(params, p_N, p_NoN);
  if (r.th.active != ActivePt::none) {
    const NonNeutralPayoff at =
        isp_non_payoff_given_ptilde(params, p_N, p_NoN, r.th.active_value);
    r.payoff_z1 = at.value;
    // Ties go to free quality.
    if (at.z == 1 && gt(at.value, r.payoff_z0)) {
      r.p_tilde = r.th.active_value;
      r.z = 1;
      r.payoff = at.value;
      return r;
    }
  }
  r.p_tilde = neutral_sentinel(r.th);
  r.z = 0;
  r.payoff = r.payoff_z0;
  return r;
}

Subgame play_subgame(const MarketParams& params, double p_N, double p_NoN,
                     bool neutral) {
  Subgame g;
  const double dp = p_NoN - p_N;
  g.th = thresholds(params, dp);
  double p_tilde;
  if (neutral) {
    g.quality = cp_best_response_z0(params, dp);
    p_tilde = neutral_sentinel(g.th);
  } else {
    const SidePaymentResult sp = optimal_side_payment(params, p_N, p_NoN);
    p_tilde = sp.p_tilde;
    g.quality = cp_best_response(params, dp, p_tilde);
  }
  g.prices = PriceProfile{p_N, p_NoN, p_tilde};
  g.split = eu_split(params, p_N, p_NoN, g.quality.q_N, g.quality.q_NoN);
  const auto [pn, pnon] = payoff_isps(params, g.prices, g.split, g.quality);
  g.pi_N = pn;
  g.pi_NoN = pnon;
  g.pi_CP = payoff_cp(params, g.split, g.quality, p_tilde);
  return g;
}

}  // namespace netneq
