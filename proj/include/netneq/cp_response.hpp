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

#ifndef NETNEQ_CP_RESPONSE_HPP_
#define NETNEQ_CP_RESPONSE_HPP_

#include "netneq/model.hpp"

namespace netneq {

// Fee-gap bands of the content provider's best response. Each band has its
// own premium strategy and governing side-payment threshold.
enum class GapBand {
  exclusive_all,   // (0, q_p), everyone on NoN; pt1
  mixed,           // (q_f, q_p) interior; pt3
  exclusive_low,   // (0, q_p) interior, below dpt; pt2
  exclusive_high,  // (0, q_p) interior, above t_N + ku(q_p - q_f); pt2
  exclusive_wide,  // (0, q_p) interior when q_f > (t_N + t_NoN)/ku; pt2
  no_premium,      // dp >= t_N + ku q_p
};

enum class ActivePt { none, pt1, pt2, pt3 };

const char* gap_band_name(GapBand b);
const char* active_pt_name(ActivePt a);

struct Thresholds {
  double pt1 = 0.0;
  double pt2 = 0.0;
  double pt3 = 0.0;
  double dpt = 0.0;
  GapBand band = GapBand::no_premium;
  ActivePt active = ActivePt::none;
  double active_value = 0.0;  // meaningless when active == none
};

Thresholds thresholds(const MarketParams& params, double dp);

QualityDecision cp_best_response_z0(const MarketParams& params, double dp);

QualityDecision cp_best_response(const MarketParams& params, double dp,
                                 double p_tilde);

// A zero-share ISP carries quality 0; z follows q_NoN == q_p afterwards.
QualityDecision normalize_strategy(const MarketParams& params, double dp,
                                   double q_N, double q_NoN);

struct CpChoice {
  QualityDecision q;
  double payoff = 0.0;
  double reach = 0.0;  // n_N q_N + n_NoN q_NoN, the payoff's slope in kappa_ad
};

// Strict preference of the content provider between two normalized
// strategies at fee gap dp: payoff first, then z = 1, then interior split,
// then positive quality on both ISPs, then the cheaper ISP serving
// everyone, then a fixed lexicographic order. With kappa_ad == 0 every
// strategy of a given z earns the same, so between z and the interior rule
// ties go to higher reach (the kappa_ad -> 0+ limit).
bool cp_prefers(const CpChoice& a, const CpChoice& b, double dp,
                double kappa_ad);

// CP payoff of a normalized strategy at the given fees.
double cp_strategy_payoff(const MarketParams& params, double dp,
                          const QualityDecision& q, double p_tilde);

}  // namespace netneq

#endif  // NETNEQ_CP_RESPONSE_HPP_
