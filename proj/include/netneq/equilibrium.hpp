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

#ifndef NETNEQ_EQUILIBRIUM_HPP_
#define NETNEQ_EQUILIBRIUM_HPP_

#include <functional>
#include <string>
#include <vector>

#include "netneq/model.hpp"
#include "netneq/side_payment.hpp"

namespace netneq {

// Closed-form price pairs that may be equilibria. "small" candidates apply
// when t_N + t_NoN <= ku q_p, "general" ones otherwise.
enum class CandidateSource {
  small_drive_out,    // (c, c + ku q_p - t_NoN)
  small_exclusive,    // interior, CP exclusive on NoN
  general_drive_out,  // same prices as small_drive_out
  general_exclusive,  // same prices as small_exclusive
  general_mixed,      // interior, free on N and premium on NoN
  general_at_cost,    // p_NoN = c
  general_free,       // free quality on both, z = 0
  benchmark,          // both ISPs forced neutral
};

const char* source_name(CandidateSource s);

struct CandidateNE {
  CandidateSource source = CandidateSource::benchmark;
  double p_N = 0.0;
  double p_NoN = 0.0;
  bool preconditions_met = true;
  std::vector<std::string> reasons;  // violated conditions
};

struct Deviation {
  int isp = -1;  // 0 = N, 1 = NoN, -1 = none found
  double price = 0.0;
  double payoff = 0.0;
  double gain = 0.0;  // payoff minus the candidate's own payoff
  bool limit = false;  // supremum approached but not attained
};

struct VerifyResult {
  bool accepted = false;
  double pi_N = 0.0;
  double pi_NoN = 0.0;
  Deviation best;  // most profitable deviation over both ISPs
  std::string inconsistency;  // non-empty if the profile contradicts its source
};

std::vector<CandidateNE> candidates_small_inertia(const MarketParams& params);
std::vector<CandidateNE> candidates_general(const MarketParams& params);
CandidateNE benchmark_candidate(const MarketParams& params);

// Unilateral deviation search for both ISPs. Benchmark candidates are
// checked under the forced-neutral rules.
VerifyResult verify_ne(const MarketParams& params, const CandidateNE& cand);

// Best attained value of a piecewise quadratic f on [lo, hi]. Pieces are
// separated by `breaks` or by jumps the routine localizes by bisection.
// Suprema reached only in the limit are chased down to an actual price that
// beats `target`; the returned point is always a real evaluation.
Deviation sup_piecewise(const std::vector<double>& breaks, double lo,
                        double hi, const std::function<double(double)>& f,
                        double target);

enum class Label { A, B, C, D, E, None, Benchmark };

const char* label_name(Label l);
int label_code(Label l);

struct CandidateReport {
  CandidateNE candidate;
  VerifyResult verify;
};

struct EquilibriumOutcome {
  Label label = Label::None;
  CandidateSource source = CandidateSource::benchmark;
  PriceProfile prices;
  QualityDecision quality;
  MarketSplit split;
  double pi_N = 0.0;
  double pi_NoN = 0.0;
  double pi_CP = 0.0;
  double euw = 0.0;
  bool multiple = false;
  std::vector<Label> accepted_labels;  // all distinct accepted profiles
  std::vector<CandidateReport> candidates;
};

EquilibriumOutcome solve_spne(const MarketParams& params);
EquilibriumOutcome benchmark_neutral(const MarketParams& params);

// Builds an outcome record from posted fees.
EquilibriumOutcome outcome_at(const MarketParams& params, double p_N,
                              double p_NoN, bool neutral);

}  // namespace netneq

#endif  // NETNEQ_EQUILIBRIUM_HPP_
