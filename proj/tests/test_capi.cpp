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

// Exercises the shared library through its C header only.

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "netneq/netneq.h"

namespace {

netneq_params* make(double tn, double tnon) {
  netneq_params* p = nullptr;
  REQUIRE(netneq_params_create(tn, tnon, 1, 0.5, 1, 1.5, 1, &p) == NETNEQ_OK);
  return p;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("version and errors") {
  CHECK(std::strcmp(netneq_version(), "1.0.0") == 0);
  netneq_params* p = nullptr;
  CHECK(netneq_params_create(1, 1, 1, 0.5, 1, 1, 1, &p) == NETNEQ_INVALID_PARAMS);
  CHECK(p == nullptr);
  CHECK(std::strcmp(netneq_last_error(), "q_p must exceed q_f") == 0);
  CHECK(netneq_params_create(1, 1, 1, 0.5, 1, 1.5, 1, nullptr) == NETNEQ_INVALID_ARGUMENT);
  CHECK(netneq_solve(nullptr, nullptr) == NETNEQ_INVALID_ARGUMENT);
  netneq_params_destroy(nullptr);
  netneq_outcome_destroy(nullptr);
  netneq_string_free(nullptr);
}

TEST_CASE("solve and read back") {
  netneq_params* p = make(0.5, 0.5);
  netneq_outcome* o = nullptr;
  REQUIRE(netneq_solve(p, &o) == NETNEQ_OK);
  const char* name = nullptr;
  int code = -1;
  CHECK(netneq_outcome_label(o, &name, &code) == NETNEQ_OK);
  CHECK(std::string(name) == "A");
  CHECK(code == 1);
  double pn = 0, pnon = 0, pt = 0;
  REQUIRE(netneq_outcome_prices(o, &pn, &pnon, &pt) == NETNEQ_OK);
  CHECK(pn == doctest::Approx(1.0));
  CHECK(pnon == doctest::Approx(2.0));
  CHECK(pt == doctest::Approx(1.0 / 6));
  double a = 0, b = 0, c = 0;
  REQUIRE(netneq_outcome_payoffs(o, &a, &b, &c) == NETNEQ_OK);
  CHECK(b == doctest::Approx(1.25));
  CHECK(c == doctest::Approx(0.5));
  char* js = nullptr;
  REQUIRE(netneq_outcome_to_json(o, &js) == NETNEQ_OK);
  CHECK(std::strstr(js, "\"label\":\"A\"") != nullptr);
  netneq_string_free(js);
  netneq_outcome_destroy(o);

  REQUIRE(netneq_benchmark(p, &o) == NETNEQ_OK);
  CHECK(netneq_outcome_label(o, &name, nullptr) == NETNEQ_OK);
  CHECK(std::string(name) == "Benchmark");
  netneq_outcome_destroy(o);

  REQUIRE(netneq_compare_to_json(p, &js) == NETNEQ_OK);
  netneq_string_free(js);
  netneq_params_destroy(p);
}

TEST_CASE("no equilibrium has no prices") {
  netneq_params* p = make(3, 2);
  netneq_outcome* o = nullptr;
  REQUIRE(netneq_solve(p, &o) == NETNEQ_OK);
  const char* name = nullptr;
  netneq_outcome_label(o, &name, nullptr);
  CHECK(std::string(name) == "None");
  double x = 0;
  CHECK(netneq_outcome_prices(o, &x, &x, &x) == NETNEQ_INVALID_ARGUMENT);
  CHECK(netneq_outcome_payoffs(o, &x, &x, &x) == NETNEQ_INVALID_ARGUMENT);
  netneq_outcome_destroy(o);
  netneq_params_destroy(p);
}

TEST_CASE("params JSON") {
  netneq_params* p = make(3, 2);
  char* js = nullptr;
  REQUIRE(netneq_params_to_json(p, &js) == NETNEQ_OK);
  netneq_params* q = nullptr;
  REQUIRE(netneq_params_from_json(js, &q) == NETNEQ_OK);
  char* js2 = nullptr;
  REQUIRE(netneq_params_to_json(q, &js2) == NETNEQ_OK);
  CHECK(std::string(js) == std::string(js2));
  netneq_string_free(js);
  netneq_string_free(js2);
  netneq_params_destroy(q);
  netneq_params_destroy(p);

  CHECK(netneq_params_from_json("{not json", &q) == NETNEQ_INVALID_PARAMS);
  CHECK(netneq_params_from_json("{\"t_N\":1}", &q) == NETNEQ_INVALID_PARAMS);
  CHECK(q == nullptr);
}

TEST_CASE("sweep files") {
  netneq_params* p = make(1, 1);
  CHECK(netneq_sweep(p, "tn:0.1:5:6", "bogus:0:1:3", 1, nullptr, nullptr) ==
        NETNEQ_INVALID_ARGUMENT);
  CHECK(netneq_sweep(p, "tn:0.1:5:6", "tnon:0.1:5:6", -1, nullptr, nullptr) ==
        NETNEQ_INVALID_ARGUMENT);
  CHECK(netneq_sweep(p, "tn:0.1:5:6", "tnon:0.1:5:6", 1, "/nonexistent/dir/x.csv", nullptr) ==
        NETNEQ_IO);
  const std::string a = "capi_sweep_1.csv", b = "capi_sweep_2.csv";
  REQUIRE(netneq_sweep(p, "tn:0.1:5:6", "tnon:0.1:5:6", 1, a.c_str(), "capi_sweep_1.dat") ==
          NETNEQ_OK);
  REQUIRE(netneq_sweep(p, "tn:0.1:5:6", "tnon:0.1:5:6", 2, b.c_str(), nullptr) == NETNEQ_OK);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).rfind("# netneq-schema v1", 0) == 0);
  std::remove(a.c_str());
  std::remove(b.c_str());
  std::remove("capi_sweep_1.dat");
  netneq_params_destroy(p);
}

TEST_CASE("verify") {
  char* report = nullptr;
  CHECK(netneq_verify("side", 500, 1, &report) == NETNEQ_OK);
  REQUIRE(report != nullptr);
  CHECK(std::strstr(report, "\"failures\": 0") != nullptr);
  netneq_string_free(report);
  CHECK(netneq_verify("nope", 10, 1, &report) == NETNEQ_INVALID_ARGUMENT);
  CHECK(netneq_verify("cp", 0, 1, &report) == NETNEQ_INVALID_ARGUMENT);
}
