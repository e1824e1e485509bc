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

#include "netneq/analysis.hpp"

#include <cmath>
#include <limits>

#include "netneq/cp_response.hpp"
#include "netneq/tolerance.hpp"

namespace netneq {

Label label_for_source(CandidateSource s) {
  switch (s) {
    case CandidateSource::small_drive_out:
    case CandidateSource::general_drive_out: return Label::A;
    case CandidateSource::small_exclusive:
    case CandidateSource::general_exclusive: return Label::B;
    case CandidateSource::general_mixed: return Label::C;
    case CandidateSource::general_at_cost: return Label::D;
    case CandidateSource::general_free: return Label::E;
    case CandidateSource::benchmark: return Label::Benchmark;
  }
  return Label::None;
}

namespace {

struct Prediction {
  double n_N;
  double q_N;
  double q_NoN;
  int z;
  double p_tilde;  // ignored when z == 0
};

Prediction predict(const MarketParams& p, Label l, double dp) {
  const double T = p.t_sum();
  const double ks = p.kappa_u + p.kappa_ad;
  const double ratio = p.q_f / p.q_p;
  const Thresholds th = thresholds(p, dp);
  switch (l) {
    case Label::A:
      return {0.0, 0.0, p.q_p, 1, th.pt1};
    case Label::B: {
      const double n = (p.t_N + 2 * p.t_NoN - p.q_p * ks) / (3 * T);
      return {n, 0.0, p.q_p, 1, p.kappa_ad * ((1 - n) - ratio)};
    }
    case Label::C: {
      const double n = (p.t_N + 2 * p.t_NoN - (p.q_p - p.q_f) * ks) / (3 * T);
      return {n, p.q_f, p.q_p, 1, p.kappa_ad * (1 - n) * (1 - ratio)};
    }
    case Label::D: {
      const double n = p.kappa_u * p.q_p / T;
      return {n, p.q_f, p.q_p, 1, p.kappa_ad * (1 - n) * (1 - ratio)};
    }
    default:
      return {(2 * p.t_NoN + p.t_N) / (3 * T), p.q_f, p.q_f, 0, 0.0};
  }
}

}  // namespace

Classification classify_outcome(const MarketParams& p,
                                const EquilibriumOutcome& o) {
  Classification c;
  c.label = o.label == Label::Benchmark ? Label::Benchmark
                                        : label_for_source(o.source);
  if (o.label == Label::None) {
    c.label = Label::None;
    return c;
  }
  const Prediction pr = predict(p, c.label, o.prices.dp());
  auto fail = [&](const char* what) {
    if (c.consistent) c.mismatch = what;
    c.consistent = false;
  };
  if (!near(o.split.n_N, pr.n_N)) fail("n_N");
  if (!near(o.quality.q_N, pr.q_N)) fail("q_N");
  if (!near(o.quality.q_NoN, pr.q_NoN)) fail("q_NoN");
  if (o.quality.z != pr.z) fail("z");
  if (pr.z == 1 && !near(o.prices.p_tilde, pr.p_tilde)) fail("p_tilde");
  return c;
}

double eu_welfare(const MarketParams& p, const PriceProfile& prices,
                  const QualityDecision& q, const MarketSplit& s) {
  return (p.kappa_u * q.q_N - prices.p_N) * s.n_N -
         0.5 * p.t_N * s.n_N * s.n_N +
         (p.kappa_u * q.q_NoN - prices.p_NoN) * s.n_NoN -
         0.5 * p.t_NoN * s.n_NoN * s.n_NoN;
}

Comparison compare_to_benchmark(const MarketParams& params) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  Comparison r;
  r.spne = solve_spne(params);
  r.bench = benchmark_neutral(params);
  r.has_spne = r.spne.label != Label::None;
  const double cp_ref = params.kappa_ad * params.q_f;
  const bool bench_cp = near(r.bench.pi_CP, cp_ref);
  r.d_p_N = r.d_p_NoN = r.d_pi_N = r.d_pi_NoN = r.d_pi_CP = r.d_euw = kNaN;
  r.discount_closed = kNaN;
  if (!r.has_spne) {
    r.cp_equal = bench_cp;
    return r;
  }
  r.d_p_N = r.spne.prices.p_N - r.bench.prices.p_N;
  r.d_p_NoN = r.spne.prices.p_NoN - r.bench.prices.p_NoN;
  r.d_pi_N = r.spne.pi_N - r.bench.pi_N;
  r.d_pi_NoN = r.spne.pi_NoN - r.bench.pi_NoN;
  r.d_pi_CP = r.spne.pi_CP - r.bench.pi_CP;
  r.d_euw = r.spne.euw - r.bench.euw;
  r.cp_equal = bench_cp && near(r.spne.pi_CP, cp_ref);
  const double k = (2 * params.kappa_ad - params.kappa_u) / 3.0;
  if (r.spne.label == Label::B) r.discount_closed = params.q_p * k;
  if (r.spne.label == Label::C) r.discount_closed = (params.q_p - params.q_f) * k;
  if (!std::isnan(r.discount_closed)) {
    r.discount_matches = near(-r.d_p_NoN, r.discount_closed);
  }
  return r;
}

}  // namespace netneq
