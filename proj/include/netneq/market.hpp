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

#ifndef NETNEQ_MARKET_HPP_
#define NETNEQ_MARKET_HPP_

#include "netneq/model.hpp"

namespace netneq {

// Indifference point of the end-user line and the clamped shares.
MarketSplit eu_split(const MarketParams& params, double p_N, double p_NoN,
                     double q_N, double q_NoN);

// Unclamped indifference point as a function of the fee gap only.
double indifference_point(const MarketParams& params, double dp, double q_N,
                          double q_NoN);

// Boundary points resolve to F_L / F_U (weak inequalities).
Region region_of(const MarketParams& params, double dp, double q_N,
                 double q_NoN);

}  // namespace netneq

#endif  // NETNEQ_MARKET_HPP_
