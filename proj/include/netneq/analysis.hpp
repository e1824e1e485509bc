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

#ifndef NETNEQ_ANALYSIS_HPP_
#define NETNEQ_ANALYSIS_HPP_

#include <string>

#include "netneq/equilibrium.hpp"
#include "netneq/model.hpp"

namespace netneq {

Label label_for_source(CandidateSource s);

struct Classification {
  Label label = Label::None;
  bool consistent = true;
  std::string mismatch;  // first predicted field that disagrees
};

// Maps an accepted outcome to its label and checks the predicted side
// payment, qualities and split against the computed ones.
Classification classify_outcome(const MarketParams& params,
                                const EquilibriumOutcome& outcome);

// End-user welfare with the common valuation dropped.
double eu_welfare(const MarketParams& params, const PriceProfile& prices,
                  const QualityDecision& quality, const MarketSplit& split);

struct Comparison {
  EquilibriumOutcome spne;
  EquilibriumOutcome bench;
  bool has_spne = false;
  // spne minus benchmark; NaN when there is no SPNE
  double d_p_N, d_p_NoN, d_pi_N, d_pi_NoN, d_pi_CP, d_euw;
  bool cp_equal = false;  // both pi_CP equal kad q_f
  double discount_closed;  // p_NoN,bench - p_NoN for labels B and C, else NaN
  bool discount_matches = true;
};

Comparison compare_to_benchmark(const MarketParams& params);

}  // namespace netneq

#endif  // NETNEQ_ANALYSIS_HPP_
