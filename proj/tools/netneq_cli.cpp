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

// netneq command line: solve | sweep | verify. Talks to the library through
// the C interface only.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "netneq/netneq.h"

namespace {

constexpr int kExitDisagree = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct ParamFlags {
  std::map<std::string, std::optional<double>> v{{"tn", {}}, {"tnon", {}}, {"ku", {}},
                                                 {"kad", {}}, {"qf", {}}, {"qp", {}},
                                                 {"c", {}}};
};

void add_param_flags(CLI::App* cmd, ParamFlags& f) {
  cmd->add_option("--tn", f.v["tn"], "transport cost of the neutral ISP");
  cmd->add_option("--tnon", f.v["tnon"], "transport cost of the non-neutral ISP");
  cmd->add_option("--ku", f.v["ku"], "end-user quality sensitivity");
  cmd->add_option("--kad", f.v["kad"], "CP advertising sensitivity");
  cmd->add_option("--qf", f.v["qf"], "free quality");
  cmd->add_option("--qp", f.v["qp"], "premium quality");
  cmd->add_option("--c", f.v["c"], "marginal cost per end-user");
}

int fail(netneq_status st) {
  std::cerr << "error: " << netneq_last_error() << '\n';
  switch (st) {
    case NETNEQ_INVALID_ARGUMENT:
    case NETNEQ_INVALID_PARAMS:
      return kExitUsage;
    case NETNEQ_VERIFY_FAILED:
      return kExitDisagree;
    default:
      return kExitInternal;
  }
}

nlohmann::json take_json(char* s) {
  nlohmann::json j = nlohmann::json::parse(s);
  netneq_string_free(s);
  return j;
}

netneq_status make_params(const std::map<std::string, double>& v, netneq_params** out) {
  return netneq_params_create(v.at("tn"), v.at("tnon"), v.at("ku"), v.at("kad"), v.at("qf"),
                              v.at("qp"), v.at("c"), out);
}

int run_solve(const ParamFlags& flags, const std::string& json_path) {
  netneq_params* params = nullptr;
  netneq_status st;
  if (!json_path.empty()) {
    for (const auto& [name, val] : flags.v) {
      if (val) {
        std::cerr << "error: --json cannot be combined with --" << name << '\n';
        return kExitUsage;
      }
    }
    std::ifstream in(json_path);
    if (!in) {
      std::cerr << "error: cannot read " << json_path << '\n';
      return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();
    st = netneq_params_from_json(buf.str().c_str(), &params);
  } else {
    std::map<std::string, double> v;
    for (const auto& [name, val] : flags.v) {
      if (!val) {
        std::cerr << "error: missing --" << name << " (or pass --json)\n";
        return kExitUsage;
      }
      v[name] = *val;
    }
    st = make_params(v, &params);
  }
  if (st != NETNEQ_OK) return fail(st);

  netneq_outcome* eq = nullptr;
  netneq_outcome* bench = nullptr;
  char* s = nullptr;
  nlohmann::json out;
  if ((st = netneq_params_to_json(params, &s)) != NETNEQ_OK) goto done;
  out["params"] = take_json(s);
  if ((st = netneq_solve(params, &eq)) != NETNEQ_OK) goto done;
  if ((st = netneq_outcome_to_json(eq, &s)) != NETNEQ_OK) goto done;
  out["outcome"] = take_json(s);
  if ((st = netneq_benchmark(params, &bench)) != NETNEQ_OK) goto done;
  if ((st = netneq_outcome_to_json(bench, &s)) != NETNEQ_OK) goto done;
  out["benchmark"] = take_json(s);
  std::cout << out.dump(2) << '\n';

done:
  netneq_outcome_destroy(bench);
  netneq_outcome_destroy(eq);
  netneq_params_destroy(params);
  return st == NETNEQ_OK ? 0 : fail(st);
}

// Lower end of an axis spec, used to seed the base point; malformed specs
// are left to the library to reject.
std::optional<std::pair<std::string, double>> axis_start(const std::string& spec) {
  const auto a = spec.find(':');
  if (a == std::string::npos) return std::nullopt;
  const auto b = spec.find(':', a + 1);
  if (b == std::string::npos) return std::nullopt;
  try {
    return std::make_pair(spec.substr(0, a), std::stod(spec.substr(a + 1, b - a - 1)));
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

int run_sweep(const ParamFlags& flags, const std::string& x, const std::string& y,
              const std::string& csv, const std::string& map, int jobs) {
  std::map<std::string, double> v;
  for (const auto& [name, val] : flags.v) {
    if (val) v[name] = *val;
  }
  for (const std::string& spec : {x, y}) {
    if (auto s = axis_start(spec); s && flags.v.count(s->first)) v[s->first] = s->second;
  }
  for (const auto& [name, val] : flags.v) {
    if (!v.count(name)) {
      std::cerr << "error: --" << name << " is required unless it is a sweep axis\n";
      return kExitUsage;
    }
  }
  netneq_params* base = nullptr;
  netneq_status st = make_params(v, &base);
  if (st != NETNEQ_OK) return fail(st);
  std::string map_path = map;
  if (map_path.empty()) {
    const auto dot = csv.rfind('.');
    map_path = (dot == std::string::npos ? csv : csv.substr(0, dot)) + ".dat";
  }
  st = netneq_sweep(base, x.c_str(), y.c_str(), jobs, csv.c_str(), map_path.c_str());
  netneq_params_destroy(base);
  if (st != NETNEQ_OK) return fail(st);
  std::cerr << "wrote " << csv << " and " << map_path << '\n';
  return 0;
}

int run_verify(const std::string& suite, long samples, std::uint64_t seed) {
  char* report = nullptr;
  const netneq_status st = netneq_verify(suite.c_str(), samples, seed, &report);
  if (report) {
    std::cout << report << '\n';
    netneq_string_free(report);
  }
  if (st == NETNEQ_OK) {
    std::cerr << "verify " << suite << ": pass\n";
    return 0;
  }
  if (st == NETNEQ_VERIFY_FAILED) std::cerr << "verify " << suite << ": FAIL\n";
  return fail(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria of a two-ISP market with one non-neutral ISP"};
  app.set_version_flag("--version", std::string(netneq_version()));
  app.require_subcommand(1);

  ParamFlags solve_flags;
  std::string json_path;
  auto* solve = app.add_subcommand("solve", "solve one instance and print it with the benchmark");
  add_param_flags(solve, solve_flags);
  solve->add_option("--json", json_path, "read parameters from a JSON file");

  ParamFlags sweep_flags;
  std::string x_axis, y_axis, csv_path, map_path;
  int jobs = 0;
  auto* sweep = app.add_subcommand("sweep", "two-axis parameter sweep to CSV and a region map");
  add_param_flags(sweep, sweep_flags);
  sweep->add_option("--x", x_axis, "first axis, name:lo:hi:steps")->required();
  sweep->add_option("--y", y_axis, "second axis, name:lo:hi:steps")->required();
  sweep->add_option("--csv", csv_path, "CSV output path")->required();
  sweep->add_option("--dat", map_path, "region-map output path (default: CSV path with .dat)");
  sweep->add_option("--jobs", jobs, "worker threads, 0 = all cores")->check(CLI::NonNegativeNumber);

  std::string suite;
  long samples = 10000;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "cross-check closed forms against brute force");
  verify->add_option("--suite", suite, "cp | side | continuous | spne")
      ->required()
      ->check(CLI::IsMember({"cp", "side", "continuous", "spne"}));
  verify->add_option("--samples", samples, "number of random instances")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) return run_solve(solve_flags, json_path);
    if (*sweep) return run_sweep(sweep_flags, x_axis, y_axis, csv_path, map_path, jobs);
    if (*verify) return run_verify(suite, samples, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}
