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

#ifndef NETNEQ_SWEEP_HPP_
#define NETNEQ_SWEEP_HPP_

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "netneq/analysis.hpp"
#include "netneq/model.hpp"

namespace netneq {

class BadAxis : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// One of tn, tnon, ku, kad, qf, qp with `steps` evenly spaced values.
struct Axis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  int steps = 1;

  double value(int k) const;
};

// "name:lo:hi:steps". Throws BadAxis.
Axis parse_axis(const std::string& spec);
Axis make_axis(const std::string& name, double lo, double hi, int steps);

void set_axis_value(MarketParams& p, const std::string& name, double v);

struct SweepSpec {
  Axis x;
  Axis y;
  MarketParams base;
  int jobs = 0;  // 0 = hardware concurrency
};

struct SweepRow {
  double x = 0.0;
  double y = 0.0;
  Comparison cmp;
};

// Rows ordered with y outer and x inner, whatever the worker count.
// Throws BadAxis or InvalidParams before any work starts.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_csv(std::ostream& os, const SweepSpec& spec,
               const std::vector<SweepRow>& rows);

// gnuplot pm3d input: "x y code", blank line after each y row.
void write_region_map(std::ostream& os, const SweepSpec& spec,
                      const std::vector<SweepRow>& rows);

}  // namespace netneq

#endif  // NETNEQ_SWEEP_HPP_
