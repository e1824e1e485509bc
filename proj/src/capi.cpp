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

#include "netneq/netneq.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <new>
#include <string>

#include "json.hpp"
#include "netneq/analysis.hpp"
#include "netneq/equilibrium.hpp"
#include "netneq/serialize.hpp"
#include "netneq/sweep.hpp"
#include "netneq/verify.hpp"

struct netneq_params {
  netneq::MarketParams p;
};

struct netneq_outcome {
  netneq::EquilibriumOutcome o;
};

namespace {

thread_local std::string g_error;

netneq_status set_error(netneq_status s, const std::string& msg) {
  g_error = msg;
  return s;
}

netneq_status ok() {
  g_error.clear();
  return NETNEQ_OK;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Maps exceptions escaping the core onto status codes.
template <typename F>
netneq_status guarded(F&& f) {
  try {
    return f();
  } catch (const netneq::InvalidParams& e) {
    return set_error(NETNEQ_INVALID_PARAMS, e.what());
  } catch (const netneq::BadAxis& e) {
    return set_error(NETNEQ_INVALID_ARGUMENT, e.what());
  } catch (const nlohmann::json::exception& e) {
    return set_error(NETNEQ_INVALID_PARAMS, std::string("malformed JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return set_error(NETNEQ_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return set_error(NETNEQ_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(NETNEQ_INTERNAL, e.what());
  } catch (...) {
    return set_error(NETNEQ_INTERNAL, "unknown error");
  }
}

bool null_arg(const void* ptr, const char* name, netneq_status* st) {
  if (ptr) return false;
  *st = set_error(NETNEQ_INVALID_ARGUMENT, std::string(name) + " must not be null");
  return true;
}

}  // namespace

extern "C" {

const char* netneq_version(void) { return "1.0.0"; }

const char* netneq_last_error(void) { return g_error.c_str(); }

void netneq_string_free(char* s) { std::free(s); }

netneq_status netneq_params_create(double t_N, double t_NoN, double kappa_u, double kappa_ad,
                                   double q_f, double q_p, double c, netneq_params** out) {
  netneq_status st;
  if (null_arg(out, "out", &st)) return st;
  *out = nullptr;
  return guarded([&] {
    netneq::MarketParams p;
    p.t_N = t_N;
    p.t_NoN = t_NoN;
    p.kappa_u = kappa_u;
    p.kappa_ad = kappa_ad;
    p.q_f = q_f;
    p.q_p = q_p;
    p.c = c;
    netneq::validate(p);
    *out = new netneq_params{p};
    return ok();
  });
}

netneq_status netneq_params_from_json(const char* json, netneq_params** out) {
  netneq_status st;
  if (null_arg(out, "out", &st) || null_arg(json, "json", &st)) return st;
  *out = nullptr;
  return guarded([&] {
    const netneq::MarketParams p = netneq::params_from_json(nlohmann::json::parse(json));
    *out = new netneq_params{p};
    return ok();
  });
}

netneq_status netneq_params_to_json(const netneq_params* p, char** out) {
  netneq_status st;
  if (null_arg(p, "params", &st) || null_arg(out, "out", &st)) return st;
  return guarded([&] {
    *out = dup_string(netneq::params_to_json(p->p).dump());
    return ok();
  });
}

void netneq_params_destroy(netneq_params* p) { delete p; }

netneq_status netneq_solve(const netneq_params* p, netneq_outcome** out) {
  netneq_status st;
  if (null_arg(p, "params", &st) || null_arg(out, "out", &st)) return st;
  *out = nullptr;
  return guarded([&] {
    *out = new netneq_outcome{netneq::solve_spne(p->p)};
    return ok();
  });
}

netneq_status netneq_benchmark(const netneq_params* p, netneq_outcome** out) {
  netneq_status st;
  if (null_arg(p, "params", &st) || null_arg(out, "out", &st)) return st;
  *out = nullptr;
  return guarded([&] {
    *out = new netneq_outcome{netneq::benchmark_neutral(p->p)};
    return ok();
  });
}

void netneq_outcome_destroy(netneq_outcome* o) { delete o; }

netneq_status netneq_outcome_label(const netneq_outcome* o, const char** name, int* code) {
  netneq_status st;
  if (null_arg(o, "outcome", &st)) return st;
  if (name) *name = netneq::label_name(o->o.label);
  if (code) *code = netneq::label_code(o->o.label);
  return ok();
}

netneq_status netneq_outcome_prices(const netneq_outcome* o, double* p_N, double* p_NoN,
                                    double* p_tilde) {
  netneq_status st;
  if (null_arg(o, "outcome", &st)) return st;
  if (o->o.label == netneq::Label::None) {
    return set_error(NETNEQ_INVALID_ARGUMENT, "outcome has no equilibrium");
  }
  if (p_N) *p_N = o->o.prices.p_N;
  if (p_NoN) *p_NoN = o->o.prices.p_NoN;
  if (p_tilde) *p_tilde = o->o.prices.p_tilde;
  return ok();
}

netneq_status netneq_outcome_payoffs(const netneq_outcome* o, double* pi_N, double* pi_NoN,
                                     double* pi_CP) {
  netneq_status st;
  if (null_arg(o, "outcome", &st)) return st;
  if (o->o.label == netneq::Label::None) {
    return set_error(NETNEQ_INVALID_ARGUMENT, "outcome has no equilibrium");
  }
  if (pi_N) *pi_N = o->o.pi_N;
  if (pi_NoN) *pi_NoN = o->o.pi_NoN;
  if (pi_CP) *pi_CP = o->o.pi_CP;
  return ok();
}

netneq_status netneq_outcome_to_json(const netneq_outcome* o, char** out) {
  netneq_status st;
  if (null_arg(o, "outcome", &st) || null_arg(out, "out", &st)) return st;
  return guarded([&] {
    *out = dup_string(netneq::outcome_to_json(o->o).dump());
    return ok();
  });
}

netneq_status netneq_compare_to_json(const netneq_params* p, char** out) {
  netneq_status st;
  if (null_arg(p, "params", &st) || null_arg(out, "out", &st)) return st;
  return guarded([&] {
    *out = dup_string(netneq::comparison_to_json(netneq::compare_to_benchmark(p->p)).dump());
    return ok();
  });
}

netneq_status netneq_sweep(const netneq_params* base, const char* x_axis, const char* y_axis,
                           int jobs, const char* csv_path, const char* map_path) {
  netneq_status st;
  if (null_arg(base, "base", &st) || null_arg(x_axis, "x_axis", &st) ||
      null_arg(y_axis, "y_axis", &st)) {
    return st;
  }
  if (jobs < 0) return set_error(NETNEQ_INVALID_ARGUMENT, "jobs must be >= 0");
  return guarded([&] {
    netneq::SweepSpec spec;
    spec.x = netneq::parse_axis(x_axis);
    spec.y = netneq::parse_axis(y_axis);
    spec.base = base->p;
    spec.jobs = jobs;
    const auto rows = netneq::run_sweep(spec);
    if (csv_path) {
      std::ofstream f(csv_path, std::ios::binary);
      if (!f) return set_error(NETNEQ_IO, std::string("cannot open ") + csv_path);
      netneq::write_csv(f, spec, rows);
      if (!f.flush()) return set_error(NETNEQ_IO, std::string("cannot write ") + csv_path);
    }
    if (map_path) {
      std::ofstream f(map_path, std::ios::binary);
      if (!f) return set_error(NETNEQ_IO, std::string("cannot open ") + map_path);
      netneq::write_region_map(f, spec, rows);
      if (!f.flush()) return set_error(NETNEQ_IO, std::string("cannot write ") + map_path);
    }
    return ok();
  });
}

netneq_status netneq_verify(const char* suite, long samples, uint64_t seed, char** report) {
  netneq_status st;
  if (null_arg(suite, "suite", &st) || null_arg(report, "report", &st)) return st;
  *report = nullptr;
  if (samples < 1) return set_error(NETNEQ_INVALID_ARGUMENT, "samples must be positive");
  return guarded([&] {
    const netneq::SuiteReport r = netneq::run_suite(suite, samples, seed);
    *report = dup_string(r.to_json().dump(2));
    if (!r.pass()) {
      return set_error(NETNEQ_VERIFY_FAILED,
                       "suite " + r.suite + ": " + std::to_string(r.failures) + " of " +
                           std::to_string(r.samples) + " samples disagree");
    }
    return ok();
  });
}

}  // extern "C"
