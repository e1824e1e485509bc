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

#include "netneq/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netneq/analysis.hpp"
#include "netneq/tolerance.hpp"

namespace netneq {

const char* source_name(CandidateSource s) {
  switch (s) {
    case CandidateSource::small_drive_out: return "small.drive_out";
    case CandidateSource::small_exclusive: return "small.exclusive";
    case CandidateSource::general_drive_out: return "general.drive_out";
    case CandidateSource::general_exclusive: return "general.exclusive";
    case CandidateSource::general_mixed: return "general.mixed";
    case CandidateSource::general_at_cost: return "general.at_cost";
    case CandidateSource::general_free: return "general.free";
    case CandidateSource::benchmark: return "benchmark";
  }
  return "?";
}

const char* label_name(Label l) {
  switch (l) {
    case Label::A: return "A";
    case Label::B: return "B";
    case Label::C: return "C";
    case Label::D: return "D";
    case Label::E: return "E";
    case Label::None: return "None";
    case Label::Benchmark: return "Benchmark";
  }
  return "?";
}

int label_code(Label l) {
  switch (l) {
    case Label::A: return 1;
    case Label::B: return 2;
    case Label::C: return 3;
    case Label::D: return 4;
    case Label::E: return 5;
    default: return 0;
  }
}

namespace {

void check(CandidateNE& cand, bool ok, const char* what) {
  if (!ok) {
    cand.preconditions_met = false;
    cand.reasons.emplace_back(what);
  }
}

std::pair<double, double> drive_out_prices(const MarketParams& p) {
  return {p.c, p.c + p.kappa_u * p.q_p - p.t_NoN};
}

// Interior prices when the quality advantage of NoN is dq.
std::pair<double, double> interior_prices(const MarketParams& p, double dq) {
  const double ks = p.kappa_u + p.kappa_ad;
  return {p.c + (2 * p.t_NoN + p.t_N - dq * ks) / 3.0,
          p.c + (p.t_NoN + 2 * p.t_N + dq * (p.kappa_u - 2 * p.kappa_ad)) / 3.0};
}

std::pair<double, double> free_prices(const MarketParams& p) {
  return {p.c + (2 * p.t_NoN + p.t_N) / 3.0, p.c + (2 * p.t_N + p.t_NoN) / 3.0};
}

CandidateNE make(CandidateSource s, std::pair<double, double> prices) {
  CandidateNE c;
  c.source = s;
  c.p_N = prices.first;
  c.p_NoN = prices.second;
  return c;
}

}  // namespace

std::vector<CandidateNE> candidates_small_inertia(const MarketParams& p) {
  std::vector<CandidateNE> out;
  if (gt(p.t_sum(), p.kappa_u * p.q_p)) return out;
  const double ks = p.kappa_u + p.kappa_ad;
  const bool high_premium = ge(p.q_p * ks, p.t_N + 2 * p.t_NoN);

  CandidateNE a = make(CandidateSource::small_drive_out, drive_out_prices(p));
  check(a, high_premium, "q_p >= (t_N + 2 t_NoN)/(ku + kad)");
  out.push_back(a);

  CandidateNE b = make(CandidateSource::small_exclusive, interior_prices(p, p.q_p));
  check(b, !high_premium, "q_p < (t_N + 2 t_NoN)/(ku + kad)");
  const double root = 2 * p.t_NoN + p.t_N - p.q_p * ks;
  const double pi_N = root * root / (9.0 * p.t_sum());
  const double pdt = p.kappa_ad * p.q_f * p.t_sum() /
                         (b.p_NoN - p.c + p.kappa_ad * p.q_p) +
                     b.p_NoN - p.t_NoN - p.kappa_u * p.q_p;
  check(b, ge(pi_N, pdt - p.c), "pi_N(p_N) >= p^d_t - c");
  out.push_back(b);
  return out;
}

std::vector<CandidateNE> candidates_general(const MarketParams& p) {
  std::vector<CandidateNE> out;
  if (lt(p.t_sum(), p.kappa_u * p.q_p)) return out;
  const double ku = p.kappa_u;
  const double ks = p.kappa_u + p.kappa_ad;
  const double lo_band = ku * p.q_p - p.t_NoN;
  const double dpt = ku * (2 * p.q_p - p.q_f) - p.t_NoN;
  const double hi_mixed = p.t_N + ku * (p.q_p - p.q_f);
  const double hi_band = p.t_N + ku * p.q_p;

  {
    CandidateNE a = make(CandidateSource::general_drive_out, drive_out_prices(p));
    check(a, le(a.p_NoN - a.p_N, lo_band), "dp <= ku q_p - t_NoN");
    out.push_back(a);
  }
  {
    CandidateNE b = make(CandidateSource::general_exclusive, interior_prices(p, p.q_p));
    const double dp = b.p_NoN - b.p_N;
    const bool w1 = gt(dp, lo_band) && lt(dp, dpt);
    const bool w2 = gt(dp, hi_mixed) && lt(dp, hi_band);
    check(b, w1 || w2, "dp inside an exclusive-premium window");
    check(b, le(p.q_p * ks, 2 * p.t_NoN + p.t_N), "q_p <= (2 t_NoN + t_N)/(ku + kad)");
    const SidePaymentResult sp = optimal_side_payment(p, b.p_N, b.p_NoN);
    check(b, sp.th.active == ActivePt::pt2 && gt(sp.payoff_z1, sp.payoff_z0),
          "premium at pt2 beats free quality");
    out.push_back(b);
  }
  {
    CandidateNE m = make(CandidateSource::general_mixed,
                         interior_prices(p, p.q_p - p.q_f));
    const double dp = m.p_NoN - m.p_N;
    check(m, gt(dp, dpt) && lt(dp, hi_mixed), "dp inside the mixed window");
    check(m, le((p.q_p - p.q_f) * ks, 2 * p.t_NoN + p.t_N),
          "q_p - q_f <= (2 t_NoN + t_N)/(ku + kad)");
    const SidePaymentResult sp = optimal_side_payment(p, m.p_N, m.p_NoN);
    check(m, sp.th.active == ActivePt::pt3 && gt(sp.payoff_z1, sp.payoff_z0),
          "premium at pt3 beats free quality");
    out.push_back(m);
  }
  {
    CandidateNE d = make(CandidateSource::general_at_cost,
                         {p.c - ku * (2 * p.q_p - p.q_f) + p.t_NoN, p.c});
    check(d, le(ku * (2 * p.q_p - p.q_f), p.t_NoN), "2 q_p - q_f <= t_NoN/ku");
    check(d, ge(d.p_N, p.c), "p_N >= c");
    const SidePaymentResult sp = optimal_side_payment(p, d.p_N, d.p_NoN);
    check(d, sp.th.active == ActivePt::pt3 && gt(sp.payoff_z1, sp.payoff_z0),
          "premium at pt3 beats free quality");
    out.push_back(d);
  }
  {
    CandidateNE e = make(CandidateSource::general_free, free_prices(p));
    const SidePaymentResult sp = optimal_side_payment(p, e.p_N, e.p_NoN);
    check(e, sp.z == 0, "free quality at least as good as premium");
    out.push_back(e);
  }
  return out;
}

CandidateNE benchmark_candidate(const MarketParams& p) {
  return make(CandidateSource::benchmark, free_prices(p));
}

// ---------------------------------------------------------------------------
// Deviation search.

namespace {

struct Quadratic {
  double x0, x1, x2, d0, d1, d2;  // Newton form
  double operator()(double x) const {
    return d0 + (x - x0) * (d1 + (x - x1) * d2);
  }
  static Quadratic fit(const double* xs, const double* ys) {
    Quadratic q;
    q.x0 = xs[0];
    q.x1 = xs[1];
    q.x2 = xs[2];
    q.d0 = ys[0];
    q.d1 = (ys[1] - ys[0]) / (xs[1] - xs[0]);
    const double d12 = (ys[2] - ys[1]) / (xs[2] - xs[1]);
    q.d2 = (d12 - q.d1) / (xs[2] - xs[0]);
    return q;
  }
  // Stationary point, if the piece is not linear.
  bool vertex(double* v) const {
    if (d2 == 0.0) return false;
    *v = 0.5 * (x0 + x1) - d1 / (2.0 * d2);
    return true;
  }
};

bool fits(double model, double actual) {
  return std::abs(model - actual) <=
         1e-9 * std::max({1.0, std::abs(model), std::abs(actual)});
}

class SupSearch {
 public:
  SupSearch(const std::function<double(double)>& f, double target)
      : f_(f), target_(target) {}

  void eval(double x) {
    const double v = f_(x);
    if (v > best_.payoff || best_.isp < 0) {
      best_.payoff = v;
      best_.price = x;
      best_.isp = 0;
      best_.limit = false;
    }
  }

  // Walks from `inside` towards `edge` looking for a real point that beats
  // the target, given that the piece's limit at `edge` does.
  void chase(double edge, double inside) {
    for (int k = 1; k <= 52; ++k) {
      const double x = edge + (inside - edge) * std::ldexp(1.0, -k);
      if (x == edge) break;
      const double v = f_(x);
      if (v > best_.payoff) {
        best_.payoff = v;
        best_.price = x;
        best_.limit = true;
      }
      if (gt(v, target_)) return;
    }
  }

  void scan(double a, double b, int depth) {
    const double w = b - a;
    if (!(w > 0)) return;
    double xs[3] = {a + 0.25 * w, a + 0.5 * w, a + 0.75 * w};
    double ys[3];
    for (int i = 0; i < 3; ++i) {
      ys[i] = f_(xs[i]);
      offer(xs[i], ys[i]);
    }
    const Quadratic q = Quadratic::fit(xs, ys);
    const double probes[4] = {a + w * 0x1p-20, a + 0.125 * w, b - 0.125 * w,
                              b - w * 0x1p-20};
    bool ok = true;
    for (double x : probes) {
      const double y = f_(x);
      offer(x, y);
      ok = ok && fits(q(x), y);
    }
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (!ok) {
      if (depth < 64 && w > 1e-13 * scale) {
        const double mid = a + 0.5 * w;
        scan(a, mid, depth + 1);
        scan(mid, b, depth + 1);
      }
      return;
    }
    double v;
    if (q.vertex(&v) && v > a && v < b) eval(v);
    if (gt(q(a), target_)) chase(a, xs[0]);
    if (gt(q(b), target_)) chase(b, xs[2]);
  }

  const Deviation& best() const { return best_; }

 private:
  void offer(double x, double y) {
    if (y > best_.payoff || best_.isp < 0) {
      best_.payoff = y;
      best_.price = x;
      best_.isp = 0;
      best_.limit = false;
    }
  }

  const std::function<double(double)>& f_;
  double target_;
  Deviation best_;
};

}  // namespace

Deviation sup_piecewise(const std::vector<double>& breaks, double lo,
                        double hi, const std::function<double(double)>& f,
                        double target) {
  std::vector<double> pts{lo, hi};
  for (double b : breaks) {
    if (b > lo && b < hi) pts.push_back(b);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  SupSearch s(f, target);
  const double scale = std::max({1.0, std::abs(lo), std::abs(hi)});
  const double delta = 1e-8 * scale;
  for (double x : pts) {
    s.eval(x);
    if (x - delta >= lo) s.eval(x - delta);
    if (x + delta <= hi) s.eval(x + delta);
  }
  for (size_t i = 0; i + 1 < pts.size(); ++i) s.scan(pts[i], pts[i + 1], 0);
  constexpr int kGrid = 512;
  for (int i = 0; i < kGrid; ++i) s.eval(lo + (hi - lo) * i / (kGrid - 1));
  Deviation d = s.best();
  d.gain = d.payoff - target;
  return d;
}

namespace {

struct Expected {
  int z;
  bool q_N_positive;
  Region region;
};

Expected expected_for(CandidateSource s) {
  switch (s) {
    case CandidateSource::small_drive_out:
    case CandidateSource::general_drive_out:
      return {1, false, Region::F_L};
    case CandidateSource::small_exclusive:
    case CandidateSource::general_exclusive:
      return {1, false, Region::F_I};
    case CandidateSource::general_mixed:
    case CandidateSource::general_at_cost:
      return {1, true, Region::F_I};
    case CandidateSource::general_free:
    case CandidateSource::benchmark:
      return {0, true, Region::F_I};
  }
  return {0, true, Region::F_I};
}

// Fee gaps at which the payoff of either ISP can change form.
std::vector<double> gap_breaks(const MarketParams& p) {
  const double ku = p.kappa_u;
  const double dqs[] = {0.0,        p.q_f,  -p.q_f, p.q_p, -p.q_p,
                        p.q_p - p.q_f, p.q_f - p.q_p};
  std::vector<double> out;
  for (double dq : dqs) {
    out.push_back(ku * dq - p.t_NoN);
    out.push_back(p.t_N + ku * dq);
  }
  out.push_back(ku * (2 * p.q_p - p.q_f) - p.t_NoN);
  return out;
}

}  // namespace

VerifyResult verify_ne(const MarketParams& p, const CandidateNE& cand) {
  VerifyResult r;
  const bool neutral = cand.source == CandidateSource::benchmark;
  const Subgame own = play_subgame(p, cand.p_N, cand.p_NoN, neutral);
  r.pi_N = own.pi_N;
  r.pi_NoN = own.pi_NoN;

  const Expected ex = expected_for(cand.source);
  if (own.quality.z != ex.z || (own.quality.q_N > 0) != ex.q_N_positive ||
      own.quality.region != ex.region) {
    r.inconsistency = std::string("profile resolves to z=") +
                      std::to_string(own.quality.z) + " in " +
                      region_name(own.quality.region) +
                      ", not the structure its source assumes";
  }

  const double T = p.t_sum();
  const double reach = p.kappa_u * p.q_p;
  const std::vector<double> gaps = gap_breaks(p);

  // Neutral ISP moves p_N with p_NoN fixed; dp = p_NoN - p_N.
  std::vector<double> breaks_N{p.c, cand.p_N};
  for (double g : gaps) breaks_N.push_back(cand.p_NoN - g);
  const double hi_N = std::max(cand.p_N + T + reach, cand.p_NoN + p.t_NoN + reach);
  const std::function<double(double)> f_N = [&](double x) {
    return play_subgame(p, x, cand.p_NoN, neutral).pi_N;
  };
  Deviation dev_N = sup_piecewise(breaks_N, p.c, std::max(hi_N, p.c + 1.0),
                                  f_N, r.pi_N);
  dev_N.isp = 0;

  // Non-neutral ISP moves p_NoN. Below c it can still profit from the
  // side payment, so the range extends to where it already serves everyone.
  std::vector<double> breaks_NoN{p.c, cand.p_NoN};
  for (double g : gaps) breaks_NoN.push_back(cand.p_N + g);
  const double lo_NoN = std::min(p.c, cand.p_N - p.t_NoN - reach);
  const double hi_NoN = std::max(cand.p_NoN + T + reach, cand.p_N + p.t_N + reach);
  const std::function<double(double)> f_NoN = [&](double y) {
    return play_subgame(p, cand.p_N, y, neutral).pi_NoN;
  };
  Deviation dev_NoN = sup_piecewise(breaks_NoN, lo_NoN, hi_NoN, f_NoN, r.pi_NoN);
  dev_NoN.isp = 1;

  const bool n_ok = !gt(dev_N.payoff, r.pi_N);
  const bool non_ok = !gt(dev_NoN.payoff, r.pi_NoN);
  r.best = dev_N.gain >= dev_NoN.gain ? dev_N : dev_NoN;
  r.accepted = n_ok && non_ok && r.inconsistency.empty();
  return r;
}

// ---------------------------------------------------------------------------

EquilibriumOutcome outcome_at(const MarketParams& p, double p_N, double p_NoN,
                              bool neutral) {
  const Subgame g = play_subgame(p, p_N, p_NoN, neutral);
  EquilibriumOutcome o;
  o.prices = g.prices;
  o.quality = g.quality;
  o.split = g.split;
  o.pi_N = g.pi_N;
  o.pi_NoN = g.pi_NoN;
  o.pi_CP = g.pi_CP;
  o.euw = eu_welfare(p, g.prices, g.quality, g.split);
  return o;
}

EquilibriumOutcome solve_spne(const MarketParams& params) {
  const MarketParams& p = validate(params);
  std::vector<CandidateNE> cands = candidates_small_inertia(p);
  for (auto& c : candidates_general(p)) cands.push_back(std::move(c));

  std::vector<CandidateReport> reports;
  std::vector<size_t> accepted;
  for (auto& c : cands) {
    CandidateReport rep{c, verify_ne(p, c)};
    if (c.preconditions_met && rep.verify.accepted) accepted.push_back(reports.size());
    reports.push_back(std::move(rep));
  }

  EquilibriumOutcome out;
  if (accepted.empty()) {
    out.label = Label::None;
    out.candidates = std::move(reports);
    return out;
  }
  const CandidateNE& first = reports[accepted.front()].candidate;
  out = outcome_at(p, first.p_N, first.p_NoN, false);
  out.source = first.source;
  out.label = label_for_source(first.source);
  // Same prices reached from both regimes count once.
  std::vector<std::pair<double, double>> seen;
  for (size_t i : accepted) {
    const CandidateNE& c = reports[i].candidate;
    const bool dup = std::any_of(seen.begin(), seen.end(), [&](const auto& s) {
      return near(s.first, c.p_N) && near(s.second, c.p_NoN);
    });
    if (dup) continue;
    seen.emplace_back(c.p_N, c.p_NoN);
    out.accepted_labels.push_back(label_for_source(c.source));
  }
  out.multiple = seen.size() > 1;
  out.candidates = std::move(reports);
  return out;
}

EquilibriumOutcome benchmark_neutral(const MarketParams& params) {
  const MarketParams& p = validate(params);
  const CandidateNE b = benchmark_candidate(p);
  EquilibriumOutcome out = outcome_at(p, b.p_N, b.p_NoN, true);
  out.label = Label::Benchmark;
  out.source = CandidateSource::benchmark;
  return out;
}

}  // namespace netneq
