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

#ifndef NETNEQ_SERIALIZE_HPP_
#define NETNEQ_SERIALIZE_HPP_

#include "json.hpp"
#include "netneq/analysis.hpp"
#include "netneq/equilibrium.hpp"
#include "netneq/model.hpp"

namespace netneq {

// Flat object with t_N, t_NoN, kappa_u, kappa_ad, q_f, q_p, c and optional
// v_star. Unknown or missing keys throw InvalidParams.
MarketParams params_from_json(const nlohmann::json& j);
nlohmann::json params_to_json(const MarketParams& p);

// Flat record. None outcomes carry per-candidate diagnostics.
nlohmann::json outcome_to_json(const EquilibriumOutcome& o);
nlohmann::json comparison_to_json(const Comparison& c);

}  // namespace netneq

#endif  // NETNEQ_SERIALIZE_HPP_
