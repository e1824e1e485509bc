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

#include "netneq/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "netneq/side_payment.hpp"
#include "netneq/tolerance.hpp"

namespace netneq {

namespace {

// Independent split and payoff; nothing here calls the closed-form path.
struct Eval {
  QualityDecision q;
  double n_N;
  double payoff;
  double reach;
};

Eval evaluate(const MarketParams& p, double dp, double q_N, double q_NoN,
              double p_tilde, bool premium_paid) {
  const double x = (p.t_NoN + p.kappa_u * (q_N - q_NoN) + dp) / (p.t_N + p.t_NoN);
  Eval e;
  if (x <= kEps) {
    e.q.region = Region::F_L;
    q_N = 0.0;
  } else if (x >= 1.0 - kEps) {
    e.q.region = Region::F_U;
    q_NoN = 0.0;
  } else {
    e.q.region = Region::F_I;
  }
  e.q.q_N = q_N;
  e.q.q_NoN = q_NoN;
  const double x2 = (p.t_NoN + p.kappa_u * (q_N - q_NoN) + dp) / (p.t_N + p.t_NoN);
  e.n_N = std::min(1.0, std::max(0.0, x2));
  const bool pays = premium_paid ? q_NoN > p.q_f : q_NoN == p.q_p;
  e.q.z = q_NoN == p.q_p ? 1 : 0;
  e.reach = e.n_N * q_N + (1.0 - e.n_N) * q_NoN;
  e.payoff = p.kappa_ad * e.reach - (pays ? p_tilde * q_NoN : 0.0);
  return e;
}

CpChoice best_of(const MarketParams& p, double dp, double p_tilde,
                 bool allow_premium) {
  const double qs_N[] = {0.0, p.q_f};
  const double qs_NoN[] = {0.0, p.q_f, p.q_p};
  CpChoice best;
  bool have = false;
  for (double qn : qs_N) {
    for (double qnon : qs_NoN) {
      if (!allow_premium && qnon == p.q_p) continue;
      const Eval e = evaluate(p, dp, qn, qnon, p_tilde, false);
      const CpChoice c{e.q, e.payoff, e.reach};
      if (!have || cp_prefers(c, best, dp, p.kappa_ad)) {
        best = c;
        have = true;
      }
    }
  }
  return best;
}

// ISP NoN payoff through the oracle CP choice.
double non_payoff(const MarketParams& p, double p_N, double p_NoN,
                  double p_tilde, int* z) {
  const double dp = p_NoN - p_N;
  const CpChoice c = oracle_cp(p, dp, p_tilde);
  const Eval e = evaluate(p, dp, c.q.q_N, c.q.q_NoN, p_tilde, false);
  *z = c.q.z;
  return (p_NoN - p.c) * (1.0 - e.n_N) + (c.q.z ? p_tilde * c.q.q_NoN : 0.0);
}

}  // namespace

CpChoice oracle_cp(const MarketParams& params, double dp, double p_tilde) {
  return best_of(params, dp, p_tilde, true);
}

CpChoice oracle_cp_free(const MarketParams& params, double dp) {
  return best_of(params, dp, 0.0, false);
}

ContinuousChoice oracle_cp_continuous(const MarketParams& p, double dp,
                                      double p_tilde, int grid_n) {
  const int g = std::max(grid_n, 2);
  ContinuousChoice best;
  best.payoff = -std::numeric_limits<double>::infinity();
  for (int a = 0; a < g; ++a) {
    const double qn = p.q_f * a / (g - 1);
    for (int b = 0; b < g; ++b) {
      const double qnon = p.q_p * b / (g - 1);
      const Eval e = evaluate(p, dp, qn, qnon, p_tilde, true);
      if (e.payoff > best.payoff) {
        best.payoff = e.payoff;
        best.q_N = e.q.q_N;
        best.q_NoN = e.q.q_NoN;
      }
    }
  }
  const double sn = best.q_N < 0.5 * p.q_f ? 0.0 : p.q_f;
  double snon = 0.0;
  if (best.q_NoN >= 0.5 * p.q_f) snon = p.q_f;
  if (best.q_NoN > 0.5 * (p.q_f + p.q_p)) snon = p.q_p;
  best.snapped = evaluate(p, dp, sn, snon, p_tilde, false).q;
  return best;
}

SideChoice oracle_side_payment(const MarketParams& p, double p_N, double p_NoN,
                               int grid_n) {
  const int g = std::max(grid_n, 2);
  const double span = p.kappa_ad * p.q_p;
  std::vector<double> cands;
  cands.reserve(g + 4);
  for (int k = 0; k < g; ++k) cands.push_back(-span + 2.0 * span * k / (g - 1));
  // Analytic thresholds, recomputed here rather than taken from the library.
  const double T = p.t_N + p.t_NoN;
  const double dp = p_NoN - p_N;
  const double r = p.q_f / p.q_p;
  const double pt1 = p.kappa_ad * (1 - r);
  const double pt2 = p.kappa_ad * ((p.t_N + p.kappa_u * p.q_p - dp) / T - r);
  const double pt3 =
      p.kappa_ad * ((p.t_N + p.kappa_u * (p.q_p - p.q_f) - dp) / T) * (1 - r);
  cands.insert(cands.end(), {pt1, pt2, pt3, std::max({pt1, pt2, pt3}) + 1.0});

  SideChoice best;
  bool have = false;
  for (double pt : cands) {
    int z = 0;
    const double v = non_payoff(p, p_N, p_NoN, pt, &z);
    bool better = !have || gt(v, best.payoff);
    // Ties favour free quality.
    if (have && !better && !gt(best.payoff, v) && z == 0 && best.z == 1) better = true;
    if (better) {
      best = SideChoice{pt, v, z};
      have = true;
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

namespace {

struct PayoffPair {
  double n;
  double non;
};

PayoffPair grid_payoffs(const MarketParams& p, double p_N, double p_NoN,
                        bool neutral) {
  if (neutral) {
    const double dp = p_NoN - p_N;
    const CpChoice c = oracle_cp_free(p, dp);
    const Eval e = evaluate(p, dp, c.q.q_N, c.q.q_NoN, 0.0, false);
    return {(p_N - p.c) * e.n_N, (p_NoN - p.c) * (1.0 - e.n_N)};
  }
  const Subgame g = play_subgame(p, p_N, p_NoN, false);
  return {g.pi_N, g.pi_NoN};
}

}  // namespace

SpneGrid spne_grid(const MarketParams& p, int n) {
  SpneGrid g;
  g.n = std::max(n, 3);
  g.lo = p.c;
  g.hi = p.c + 2.0 * p.t_sum() + p.kappa_u * p.q_p;
  g.h = (g.hi - g.lo) / (g.n - 1);
  // Slope bounds of (p - c) n and of the side-payment term in own price.
  const double slope = 1.0 + (g.hi - g.lo) / p.t_sum();
  g.tol_N = slope * g.h;
  g.tol_NoN = (slope + p.kappa_ad * p.q_p / p.t_sum()) * g.h;
  return g;
}

SpneGrid oracle_spne(const MarketParams& p, int price_grid_n, bool neutral) {
  SpneGrid g = spne_grid(p, price_grid_n);
  const int n = g.n;
  std::vector<double> pn(static_cast<size_t>(n) * n), pnon(pn.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const PayoffPair v = grid_payoffs(p, g.price(i), g.price(j), neutral);
      pn[static_cast<size_t>(i) * n + j] = v.n;
      pnon[static_cast<size_t>(i) * n + j] = v.non;
    }
  }
  // Best responses: over i for fixed j, over j for fixed i.
  std::vector<double> best_N(n, -std::numeric_limits<double>::infinity());
  std::vector<double> best_NoN(n, -std::numeric_limits<double>::infinity());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      best_N[j] = std::max(best_N[j], pn[static_cast<size_t>(i) * n + j]);
      best_NoN[i] = std::max(best_NoN[i], pnon[static_cast<size_t>(i) * n + j]);
    }
  }
  double min_r = std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      GridProfile gp;
      gp.i = i;
      gp.j = j;
      gp.p_N = g.price(i);
      gp.p_NoN = g.price(j);
      gp.regret_N = best_N[j] - pn[static_cast<size_t>(i) * n + j];
      gp.regret_NoN = best_NoN[i] - pnon[static_cast<size_t>(i) * n + j];
      // A snapped equilibrium sits within a cell of its grid best response,
      // so its regret is at most the payoff change of a one-cell move.
      const double own_N = pn[static_cast<size_t>(i) * n + j];
      const double own_NoN = pnon[static_cast<size_t>(i) * n + j];
      gp.tol_N = tol(own_N);
      gp.tol_NoN = tol(own_NoN);
      for (int d : {-1, 1}) {
        if (i + d >= 0 && i + d < n) {
          gp.tol_N = std::max(gp.tol_N, std::abs(pn[static_cast<size_t>(i + d) * n + j] - own_N));
        }
        if (j + d >= 0 && j + d < n) {
          gp.tol_NoN = std::max(gp.tol_NoN, std::abs(pnon[static_cast<size_t>(i) * n + j + d] - own_NoN));
        }
      }
      // Scale-free comparison so the two ISPs weigh equally.
      const double r = std::max(gp.regret_N / g.tol_N, gp.regret_NoN / g.tol_NoN);
      if (r < min_r) {
        min_r = r;
        g.min_regret = gp;
      }
      // Jumps in the cascade are not discretization error; cap by the
      // Lipschitz bound so the tolerance shrinks with the step.
      gp.tol_N = std::min(gp.tol_N, g.tol_N);
      gp.tol_NoN = std::min(gp.tol_NoN, g.tol_NoN);
      if (gp.regret_N <= gp.tol_N && gp.regret_NoN <= gp.tol_NoN) g.ne.push_back(gp);
    }
  }
  return g;
}

void refine_artifacts(const MarketParams& p, SpneGrid& grid, bool neutral) {
  const SpneGrid fine = oracle_spne(p, 2 * grid.n - 1, neutral);
  for (GridProfile& gp : grid.ne) {
    const bool kept = std::any_of(fine.ne.begin(), fine.ne.end(), [&](const GridProfile& f) {
      return std::abs(f.p_N - gp.p_N) <= grid.h && std::abs(f.p_NoN - gp.p_NoN) <= grid.h;
    });
    gp.artifact = !kept;
  }
}

GridProfile grid_regret_at(const MarketParams& p, const SpneGrid& g, double p_N,
                           double p_NoN, bool neutral) {
  GridProfile gp;
  gp.i = std::clamp(static_cast<int>(std::lround((p_N - g.lo) / g.h)), 0, g.n - 1);
  gp.j = std::clamp(static_cast<int>(std::lround((p_NoN - g.lo) / g.h)), 0, g.n - 1);
  gp.p_N = p_N;
  gp.p_NoN = p_NoN;
  const PayoffPair own = grid_payoffs(p, p_N, p_NoN, neutral);
  double bn = own.n, bnon = own.non;
  for (int k = 0; k < g.n; ++k) {
    bn = std::max(bn, grid_payoffs(p, g.price(k), p_NoN, neutral).n);
    bnon = std::max(bnon, grid_payoffs(p, p_N, g.price(k), neutral).non);
  }
  gp.regret_N = bn - own.n;
  gp.regret_NoN = bnon - own.non;
  return gp;
}

}  // namespace netneq
