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

#ifndef NETNEQ_ORACLE_HPP_
#define NETNEQ_ORACLE_HPP_

#include <vector>

#include "netneq/cp_response.hpp"
#include "netneq/model.hpp"

namespace netneq {

// Brute-force references. They share only the tie-break comparator and the
// normalization rule with the closed-form path.

// Exhaustive CP choice over {0, q_f} x {0, q_f, q_p}.
CpChoice oracle_cp(const MarketParams& params, double dp, double p_tilde);

// Same, restricted to free quality (z = 0).
CpChoice oracle_cp_free(const MarketParams& params, double dp);

struct ContinuousChoice {
  double q_N = 0.0;  // grid maximizer
  double q_NoN = 0.0;
  double payoff = 0.0;
  QualityDecision snapped;  // nearest discrete strategy, normalized
};

// Grid search over q_N in [0, q_f] and q_NoN in [0, q_p]; premium is paid
// for any q_NoN above q_f.
ContinuousChoice oracle_cp_continuous(const MarketParams& params, double dp,
                                      double p_tilde, int grid_n);

struct SideChoice {
  double p_tilde = 0.0;
  double payoff = 0.0;
  int z = 0;
};

SideChoice oracle_side_payment(const MarketParams& params, double p_N,
                               double p_NoN, int grid_n);

struct GridProfile {
  int i = 0;  // index of p_N
  int j = 0;  // index of p_NoN
  double p_N = 0.0;
  double p_NoN = 0.0;
  double regret_N = 0.0;
  double regret_NoN = 0.0;
  double tol_N = 0.0;  // largest one-cell payoff change in own price
  double tol_NoN = 0.0;
  bool artifact = false;  // vanished under step halving
};

struct SpneGrid {
  int n = 0;
  double lo = 0.0;
  double hi = 0.0;
  double h = 0.0;
  double tol_N = 0.0;  // Lipschitz bound on discretization regret
  double tol_NoN = 0.0;
  std::vector<GridProfile> ne;  // profiles within their local tolerance
  GridProfile min_regret;       // smallest max(regret_N, regret_NoN)

  double price(int k) const { return lo + h * k; }
};

// Grid geometry and discretization tolerances, without any evaluation.
SpneGrid spne_grid(const MarketParams& params, int price_grid_n);

// Grid best-response search on [c, c + 2(t_N + t_NoN) + ku q_p]^2. The
// neutral variant forces free quality and uses oracle_cp_free; the other
// variant runs the full closed-form cascade at every profile.
SpneGrid oracle_spne(const MarketParams& params, int price_grid_n,
                     bool neutral);

// Marks grid equilibria with no counterpart within one coarse cell on the
// grid with half the step.
void refine_artifacts(const MarketParams& params, SpneGrid& grid, bool neutral);

// Regret of the exact profile (p_N, p_NoN) against unilateral deviations to
// grid prices. i and j report the nearest grid indices.
GridProfile grid_regret_at(const MarketParams& params, const SpneGrid& grid,
                           double p_N, double p_NoN, bool neutral);

}  // namespace netneq

#endif  // NETNEQ_ORACLE_HPP_
