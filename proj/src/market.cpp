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

#include "netneq/market.hpp"

#include <algorithm>

#include "netneq/tolerance.hpp"

namespace netneq {

double indifference_point(const MarketParams& params, double dp, double q_N,
                          double q_NoN) {
  return (params.t_NoN + params.kappa_u * (q_N - q_NoN) + dp) / params.t_sum();
}

MarketSplit eu_split(const MarketParams& params, double p_N, double p_NoN,
                     double q_N, double q_NoN) {
  MarketSplit s;
  s.x_n = indifference_point(params, p_NoN - p_N, q_N, q_NoN);
  s.n_N = std::clamp(s.x_n, 0.0, 1.0);
  s.n_NoN = 1.0 - s.n_N;
  return s;
}

Region region_of(const MarketParams& params, double dp, double q_N,
                 double q_NoN) {
  const double x = indifference_point(params, dp, q_N, q_NoN);
  if (le(x, 0.0)) return Region::F_L;
  if (ge(x, 1.0)) return Region::F_U;
  return Region::F_I;
}

}  // namespace netneq
