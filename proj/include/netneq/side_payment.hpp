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

#ifndef NETNEQ_SIDE_PAYMENT_HPP_
#define NETNEQ_SIDE_PAYMENT_HPP_

#include "netneq/cp_response.hpp"
#include "netneq/model.hpp"

namespace netneq {

struct NonNeutralPayoff {
  double value = 0.0;
  int z = 0;
  QualityDecision quality;
  MarketSplit split;
};

NonNeutralPayoff isp_non_payoff_given_ptilde(const MarketParams& params,
                                             double p_N, double p_NoN,
                                             double p_tilde);

// Payoff of ISP NoN when the content provider stays on free quality.
double isp_non_payoff_z0(const MarketParams& params, double p_N, double p_NoN);

// Side payment reported when no premium deal is struck.
double neutral_sentinel(const Thresholds& th);

struct SidePaymentResult {
  double p_tilde = 0.0;
  int z = 0;
  double payoff = 0.0;     // ISP NoN payoff at the returned p_tilde
  double payoff_z0 = 0.0;  // ISP NoN payoff with free quality
  double payoff_z1 = 0.0;  // payoff at the active threshold; 0 if none
  Thresholds th;
};

SidePaymentResult optimal_side_payment(const MarketParams& params, double p_N,
                                       double p_NoN);

// Everything downstream of posted access fees.
struct Subgame {
  PriceProfile prices;
  QualityDecision quality;
  MarketSplit split;
  double pi_N = 0.0;
  double pi_NoN = 0.0;
  double pi_CP = 0.0;
  Thresholds th;
};

// neutral = true forces free quality (both ISPs neutral).
Subgame play_subgame(const MarketParams& params, double p_N, double p_NoN,
                     bool neutral = false);

}  // namespace netneq

#endif  // NETNEQ_SIDE_PAYMENT_HPP_
