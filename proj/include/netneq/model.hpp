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

#ifndef NETNEQ_MODEL_HPP_
#define NETNEQ_MODEL_HPP_

#include <stdexcept>
#include <string>
#include <utility>

namespace netneq {

// Exogenous parameters of one game instance. v_star is carried along but
// never enters a computation: full market coverage is assumed.
struct MarketParams {
  double t_N = 1.0;
  double t_NoN = 1.0;
  double kappa_u = 1.0;
  double kappa_ad = 0.5;
  double q_f = 1.0;
  double q_p = 1.5;
  double c = 1.0;
  double v_star = 0.0;

  double t_sum() const { return t_N + t_NoN; }
};

class InvalidParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws InvalidParams naming the first violated bound.
const MarketParams& validate(const MarketParams& params);

struct PriceProfile {
  double p_N = 0.0;
  double p_NoN = 0.0;
  double p_tilde = 0.0;

  double dp() const { return p_NoN - p_N; }
};

enum class Region { F_L, F_I, F_U };

const char* region_name(Region r);

struct QualityDecision {
  double q_N = 0.0;
  double q_NoN = 0.0;
  int z = 0;
  Region region = Region::F_I;
};

struct MarketSplit {
  double x_n = 0.0;  // unclamped
  double n_N = 0.0;
  double n_NoN = 0.0;
};

// (pi_N, pi_NoN)
std::pair<double, double> payoff_isps(const MarketParams& params,
                                      const PriceProfile& prices,
                                      const MarketSplit& split,
                                      const QualityDecision& quality);

double payoff_cp(const MarketParams& params, const MarketSplit& split,
                 const QualityDecision& quality, double p_tilde);

}  // namespace netneq

#endif  // NETNEQ_MODEL_HPP_
