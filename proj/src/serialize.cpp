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

#include "netneq/serialize.hpp"

#include <string>

namespace netneq {

using nlohmann::json;

namespace {

const char* const kFields[] = {"t_N", "t_NoN", "kappa_u", "kappa_ad", "q_f", "q_p", "c"};

double number(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end()) throw InvalidParams(std::string("missing field ") + key);
  if (!it->is_number()) throw InvalidParams(std::string(key) + " must be a number");
  return it->get<double>();
}

json deviation_json(const Deviation& d) {
  return {{"isp", d.isp == 0 ? "N" : (d.isp == 1 ? "NoN" : "none")},
          {"price", d.price},
          {"payoff", d.payoff},
          {"gain", d.gain},
          {"limit", d.limit}};
}

}  // namespace

MarketParams params_from_json(const json& j) {
  if (!j.is_object()) throw InvalidParams("params must be a JSON object");
  for (const auto& [key, _] : j.items()) {
    bool known = key == "v_star";
    for (const char* f : kFields) known = known || key == f;
    if (!known) throw InvalidParams("unknown field " + key);
  }
  MarketParams p;
  p.t_N = number(j, "t_N");
  p.t_NoN = number(j, "t_NoN");
  p.kappa_u = number(j, "kappa_u");
  p.kappa_ad = number(j, "kappa_ad");
  p.q_f = number(j, "q_f");
  p.q_p = number(j, "q_p");
  p.c = number(j, "c");
  p.v_star = j.contains("v_star") ? number(j, "v_star") : 0.0;
  validate(p);
  return p;
}

json params_to_json(const MarketParams& p) {
  return {{"t_N", p.t_N},         {"t_NoN", p.t_NoN}, {"kappa_u", p.kappa_u},
          {"kappa_ad", p.kappa_ad}, {"q_f", p.q_f},     {"q_p", p.q_p},
          {"c", p.c},             {"v_star", p.v_star}};
}

json outcome_to_json(const EquilibriumOutcome& o) {
  json j;
  j["label"] = label_name(o.label);
  if (o.label == Label::None) {
    for (const char* k : {"source", "p_N", "p_NoN", "p_tilde", "dp", "z", "q_N", "q_NoN",
                          "region", "x_n", "n_N", "n_NoN", "pi_N", "pi_NoN", "pi_CP",
                          "euw"}) {
      j[k] = nullptr;
    }
    j["multiple"] = false;
    json diags = json::array();
    for (const CandidateReport& r : o.candidates) {
      diags.push_back({{"source", source_name(r.candidate.source)},
                       {"p_N", r.candidate.p_N},
                       {"p_NoN", r.candidate.p_NoN},
                       {"preconditions_met", r.candidate.preconditions_met},
                       {"violated", r.candidate.reasons},
                       {"deviation_free", r.verify.accepted},
                       {"inconsistency", r.verify.inconsistency},
                       {"pi_N", r.verify.pi_N},
                       {"pi_NoN", r.verify.pi_NoN},
                       {"best_deviation", deviation_json(r.verify.best)}});
    }
    j["diagnostics"] = diags;
    return j;
  }
  j["source"] = source_name(o.source);
  j["p_N"] = o.prices.p_N;
  j["p_NoN"] = o.prices.p_NoN;
  j["p_tilde"] = o.prices.p_tilde;
  j["dp"] = o.prices.dp();
  j["z"] = o.quality.z;
  j["q_N"] = o.quality.q_N;
  j["q_NoN"] = o.quality.q_NoN;
  j["region"] = region_name(o.quality.region);
  j["x_n"] = o.split.x_n;
  j["n_N"] = o.split.n_N;
  j["n_NoN"] = o.split.n_NoN;
  j["pi_N"] = o.pi_N;
  j["pi_NoN"] = o.pi_NoN;
  j["pi_CP"] = o.pi_CP;
  j["euw"] = o.euw;
  j["multiple"] = o.multiple;
  if (o.multiple) {
    json labels = json::array();
    for (Label l : o.accepted_labels) labels.push_back(label_name(l));
    j["accepted_labels"] = labels;
  }
  return j;
}

json comparison_to_json(const Comparison& c) {
  return {{"spne", outcome_to_json(c.spne)},
          {"benchmark", outcome_to_json(c.bench)},
          {"d_p_N", c.d_p_N},
          {"d_p_NoN", c.d_p_NoN},
          {"d_pi_N", c.d_pi_N},
          {"d_pi_NoN", c.d_pi_NoN},
          {"d_pi_CP", c.d_pi_CP},
          {"d_euw", c.d_euw},
          {"cp_equal", c.cp_equal},
          {"discount_closed", c.discount_closed},
          {"discount_matches", c.discount_matches}};
}

}  // namespace netneq
