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

#ifndef NETNEQ_VERIFY_HPP_
#define NETNEQ_VERIFY_HPP_

#include <cstdint>
#include <random>
#include <string>

#include "json.hpp"
#include "netneq/model.hpp"

namespace netneq {

// Random valid instance for property and agreement checks.
MarketParams random_params(std::mt19937_64& rng);

// Fee gap drawn from a wide range, landing on a band edge a quarter of the
// time so boundary conventions get exercised.
double random_gap(const MarketParams& p, std::mt19937_64& rng);

// Side payment drawn around the thresholds at the given gap, hitting a
// threshold exactly a quarter of the time.
double random_side_payment(const MarketParams& p, double dp, std::mt19937_64& rng);

struct SuiteReport {
  std::string suite;
  long samples = 0;
  long failures = 0;
  long strategy_mismatches = 0;  // informational, cp suite only
  double max_error = 0.0;
  nlohmann::json counterexample;  // first failure, null if none
  nlohmann::json notes = nlohmann::json::object();

  bool pass() const { return failures == 0; }
  nlohmann::json to_json() const;
};

// Suites: "cp", "side", "continuous", "spne". Throws std::invalid_argument
// for an unknown suite name.
SuiteReport run_suite(const std::string& suite, long samples, std::uint64_t seed);

}  // namespace netneq

#endif  // NETNEQ_VERIFY_HPP_
