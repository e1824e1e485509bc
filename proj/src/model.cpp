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

#include "netneq/model.hpp"

#include <cmath>

namespace netneq {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw InvalidParams(std::string(name) + " must be finite");
  }
}

}  // namespace

const MarketParams& validate(const MarketParams& p) {
  require_finite(p.t_N, "t_N");
  require_finite(p.t_NoN, "t_NoN");
  require_finite(p.kappa_u, "kappa_u");
  require_finite(p.kappa_ad, "kappa_ad");
  require_finite(p.q_f, "q_f");
  require_finite(p.q_p, "q_p");
  require_finite(p.c, "c");
  require_finite(p.v_star, "v_star");
  if (!(p.t_N > 0)) throw InvalidParams("t_N must be positive");
  if (!(p.t_NoN > 0)) throw InvalidParams("t_NoN must be positive");
  if (!(p.kappa_u >= 0)) throw InvalidParams("kappa_u must be non-negative");
  if (!(p.kappa_ad >= 0)) throw InvalidParams("kappa_ad must be non-negative");
  if (!(p.q_f > 0)) throw InvalidParams("q_f must be positive");
  if (!(p.q_p > p.q_f)) throw InvalidParams("q_p must exceed q_f");
  if (!(p.c >= 0)) throw InvalidParams("c must be non-negative");
  return p;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::F_L: return "F_L";
    case Region::F_I: return "F_I";
    case Region::F_U: return "F_U";
  }
  return "?";
}

std::pair<double, double> payoff_isps(const MarketParams& params,
                                      const PriceProfile& prices,
                                      const MarketSplit& split,
                                      const QualityDecision& quality) {
  const double pi_N = (prices.p_N - params.c) * split.n_N;
  double pi_NoN = (prices.p_NoN - params.c) * split.n_NoN;
  if (quality.z == 1) pi_NoN += prices.p_tilde * quality.q_NoN;
  return {pi_N, pi_NoN};
}

double payoff_cp(const MarketParams& params, const MarketSplit& split,
                 const QualityDecision& quality, double p_tilde) {
  double v = split.n_N * params.kappa_ad * quality.q_N +
             split.n_NoN * params.kappa_ad * quality.q_NoN;
  if (quality.z == 1) v -= p_tilde * quality.q_NoN;
  return v;
}

}  // namespace netneq
