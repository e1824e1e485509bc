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

#include "netneq/cp_response.hpp"

#include "netneq/market.hpp"
#include "netneq/tolerance.hpp"

namespace netneq {

const char* gap_band_name(GapBand b) {
  switch (b) {
    case GapBand::exclusive_all: return "exclusive_all";
    case GapBand::mixed: return "mixed";
    case GapBand::exclusive_low: return "exclusive_low";
    case GapBand::exclusive_high: return "exclusive_high";
    case GapBand::exclusive_wide: return "exclusive_wide";
    case GapBand::no_premium: return "no_premium";
  }
  return "?";
}

const char* active_pt_name(ActivePt a) {
  switch (a) {
    case ActivePt::none: return "none";
    case ActivePt::pt1: return "pt1";
    case ActivePt::pt2: return "pt2";
    case ActivePt::pt3: return "pt3";
  }
  return "?";
}

Thresholds thresholds(const MarketParams& p, double dp) {
  const double T = p.t_sum();
  const double ku = p.kappa_u;
  const double ratio = p.q_f / p.q_p;
  Thresholds th;
  th.pt1 = p.kappa_ad * (1.0 - ratio);
  const double n2 = (p.t_N + ku * p.q_p - dp) / T;
  th.pt2 = p.kappa_ad * (n2 - ratio);
  const double n3 = (p.t_N + ku * (p.q_p - p.q_f) - dp) / T;
  th.pt3 = p.kappa_ad * n3 * (1.0 - ratio);
  th.dpt = ku * (2.0 * p.q_p - p.q_f) - p.t_NoN;

  if (le(dp, ku * p.q_p - p.t_NoN)) {
    th.band = GapBand::exclusive_all;
  } else if (lt(dp, p.t_N + ku * p.q_p)) {
    if (le(ku * p.q_f, T)) {
      if (lt(dp, p.t_N + ku * (p.q_p - p.q_f))) {
        th.band = ge(dp, th.dpt) ? GapBand::mixed : GapBand::exclusive_low;
      } else {
        th.band = GapBand::exclusive_high;
      }
    } else {
      th.band = GapBand::exclusive_wide;
    }
  } else {
    th.band = GapBand::no_premium;
  }

  switch (th.band) {
    case GapBand::exclusive_all:
      th.active = ActivePt::pt1;
      th.active_value = th.pt1;
      break;
    case GapBand::mixed:
      th.active = ActivePt::pt3;
      th.active_value = th.pt3;
      break;
    case GapBand::exclusive_low:
    case GapBand::exclusive_high:
    case GapBand::exclusive_wide:
      th.active = ActivePt::pt2;
      th.active_value = th.pt2;
      break;
    case GapBand::no_premium:
      th.active = ActivePt::none;
      th.active_value = 0.0;
      break;
  }
  return th;
}

QualityDecision cp_best_response_z0(const MarketParams& p, double dp) {
  QualityDecision d;
  d.z = 0;
  if (ge(dp, p.t_N)) {
    d.q_N = p.q_f;
    d.q_NoN = 0.0;
    d.region = Region::F_U;
  } else if (le(dp, -p.t_NoN)) {
    d.q_N = 0.0;
    d.q_NoN = p.q_f;
    d.region = Region::F_L;
  } else {
    d.q_N = p.q_f;
    d.q_NoN = p.q_f;
    d.region = Region::F_I;
  }
  return d;
}

QualityDecision cp_best_response(const MarketParams& p, double dp,
                                 double p_tilde) {
  const Thresholds th = thresholds(p, dp);
  if (th.active == ActivePt::none || gt(p_tilde, th.active_value)) {
    return cp_best_response_z0(p, dp);
  }
  QualityDecision d;
  d.z = 1;
  d.q_NoN = p.q_p;
  if (th.band == GapBand::exclusive_all) {
    d.q_N = 0.0;
    d.region = Region::F_L;
  } else if (th.band == GapBand::mixed) {
    d.q_N = p.q_f;
    d.region = Region::F_I;
  } else {
    d.q_N = 0.0;
    d.region = Region::F_I;
  }
  return d;
}

QualityDecision normalize_strategy(const MarketParams& p, double dp,
                                   double q_N, double q_NoN) {
  QualityDecision d;
  d.region = region_of(p, dp, q_N, q_NoN);
  d.q_N = d.region == Region::F_L ? 0.0 : q_N;
  d.q_NoN = d.region == Region::F_U ? 0.0 : q_NoN;
  d.z = d.q_NoN == p.q_p ? 1 : 0;
  return d;
}

double cp_strategy_payoff(const MarketParams& p, double dp,
                          const QualityDecision& q, double p_tilde) {
  // Prices enter the split only through their difference.
  const MarketSplit s = eu_split(p, 0.0, dp, q.q_N, q.q_NoN);
  return payoff_cp(p, s, q, p_tilde);
}

bool cp_prefers(const CpChoice& a, const CpChoice& b, double dp,
                double kappa_ad) {
  if (gt(a.payoff, b.payoff)) return true;
  if (gt(b.payoff, a.payoff)) return false;
  if (a.q.z != b.q.z) return a.q.z > b.q.z;
  if (kappa_ad == 0.0) {
    if (gt(a.reach, b.reach)) return true;
    if (gt(b.reach, a.reach)) return false;
  }
  const bool a_int = a.q.region == Region::F_I;
  const bool b_int = b.q.region == Region::F_I;
  if (a_int != b_int) return a_int;
  const bool a_both = a.q.q_N > 0 && a.q.q_NoN > 0;
  const bool b_both = b.q.q_N > 0 && b.q.q_NoN > 0;
  if (a_both != b_both) return a_both;
  if (a.q.region != b.q.region && dp != 0.0) {
    // Only one ISP serves in each; keep the cheaper one.
    const Region cheaper = dp > 0.0 ? Region::F_U : Region::F_L;
    if (a.q.region == cheaper) return true;
    if (b.q.region == cheaper) return false;
  }
  if (a.q.q_NoN != b.q.q_NoN) return a.q.q_NoN > b.q.q_NoN;
  return a.q.q_N > b.q.q_N;
}

}  // namespace netneq
