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

#ifndef NETNEQ_TESTS_FIXTURES_HPP_
#define NETNEQ_TESTS_FIXTURES_HPP_

#include "netneq/model.hpp"

namespace fixtures {

inline netneq::MarketParams make(double t_N, double t_NoN, double ku, double kad,
                                 double qf, double qp, double c) {
  netneq::MarketParams p;
  p.t_N = t_N;
  p.t_NoN = t_NoN;
  p.kappa_u = ku;
  p.kappa_ad = kad;
  p.q_f = qf;
  p.q_p = qp;
  p.c = c;
  return p;
}

// Small inertia, unique outcome a at (1, 2).
inline netneq::MarketParams a_instance() { return make(0.5, 0.5, 1, 0.5, 1, 1.5, 1); }
// Outcome b at (1.25, 2).
inline netneq::MarketParams b_instance() { return make(1, 1, 1, 0.5, 1, 1.5, 1); }
// Every candidate is rejected.
inline netneq::MarketParams no_spne() { return make(3, 2, 1, 0.5, 1, 1.5, 1); }
// Non-neutral ISP earns less than under the benchmark.
inline netneq::MarketParams counterexample() { return make(0.05, 0.8, 0.85, 0.85, 1, 1.03, 1); }

}  // namespace fixtures

#endif  // NETNEQ_TESTS_FIXTURES_HPP_
