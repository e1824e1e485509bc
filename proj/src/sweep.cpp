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

#include "netneq/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

namespace netneq {

namespace {

const char* const kAxisNames[] = {"tn", "tnon", "ku", "kad", "qf", "qp"};

bool known_axis(const std::string& n) {
  for (const char* a : kAxisNames) {
    if (n == a) return true;
  }
  return false;
}

std::string fmt(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& s, const std::string& spec) {
  try {
    size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw BadAxis("bad number in axis spec: " + spec);
    return v;
  } catch (const std::logic_error&) {
    throw BadAxis("bad number in axis spec: " + spec);
  }
}

}  // namespace

double Axis::value(int k) const {
  if (steps <= 1) return lo;
  if (k == steps - 1) return hi;
  return lo + (hi - lo) * k / (steps - 1);
}

Axis make_axis(const std::string& name, double lo, double hi, int steps) {
  if (!known_axis(name)) throw BadAxis("unknown axis '" + name + "'");
  if (!std::isfinite(lo) || !std::isfinite(hi) || lo > hi) {
    throw BadAxis("axis range must be finite and ordered");
  }
  if (steps < 1) throw BadAxis("axis steps must be at least 1");
  if (steps == 1 && lo != hi) throw BadAxis("a single-step axis needs lo == hi");
  return Axis{name, lo, hi, steps};
}

Axis parse_axis(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 4) throw BadAxis("axis spec must be name:lo:hi:steps, got " + spec);
  const double steps = parse_number(parts[3], spec);
  if (steps != std::floor(steps) || steps > 1e6) throw BadAxis("axis steps must be an integer");
  return make_axis(parts[0], parse_number(parts[1], spec), parse_number(parts[2], spec),
                   static_cast<int>(steps));
}

void set_axis_value(MarketParams& p, const std::string& name, double v) {
  if (name == "tn") p.t_N = v;
  else if (name == "tnon") p.t_NoN = v;
  else if (name == "ku") p.kappa_u = v;
  else if (name == "kad") p.kappa_ad = v;
  else if (name == "qf") p.q_f = v;
  else if (name == "qp") p.q_p = v;
  else throw BadAxis("unknown axis '" + name + "'");
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  if (spec.x.name == spec.y.name) throw BadAxis("the two axes must differ");
  const int nx = spec.x.steps, ny = spec.y.steps;
  const size_t total = static_cast<size_t>(nx) * ny;
  std::vector<MarketParams> points(total);
  std::vector<SweepRow> rows(total);
  for (int b = 0; b < ny; ++b) {
    for (int a = 0; a < nx; ++a) {
      const size_t k = static_cast<size_t>(b) * nx + a;
      MarketParams p = spec.base;
      set_axis_value(p, spec.x.name, spec.x.value(a));
      set_axis_value(p, spec.y.name, spec.y.value(b));
      validate(p);
      points[k] = p;
      rows[k].x = spec.x.value(a);
      rows[k].y = spec.y.value(b);
    }
  }

  int jobs = spec.jobs > 0 ? spec.jobs : static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(total)));
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (size_t k = next++; k < total; k = next++) {
      try {
        rows[k].cmp = compare_to_benchmark(points[k]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return rows;
}

void write_csv(std::ostream& os, const SweepSpec& spec, const std::vector<SweepRow>& rows) {
  os << "# netneq-schema v1\n";
  os << spec.x.name << ',' << spec.y.name
     << ",label,p_N,p_NoN,p_tilde,z,n_N,n_NoN,pi_N,pi_NoN,pi_CP,euw"
        ",bench_p_N,bench_p_NoN,bench_n_N,bench_n_NoN,bench_pi_N,bench_pi_NoN"
        ",bench_pi_CP,bench_euw,d_p_N,d_p_NoN,d_pi_N,d_pi_NoN,d_pi_CP,d_euw"
        ",cp_equal,discount_closed,multiple\n";
  for (const SweepRow& r : rows) {
    const Comparison& c = r.cmp;
    const EquilibriumOutcome& s = c.spne;
    const EquilibriumOutcome& b = c.bench;
    const bool has = c.has_spne;
    const double nan = std::nan("");
    auto v = [&](double x) { return fmt(has ? x : nan); };
    os << fmt(r.x) << ',' << fmt(r.y) << ',' << label_name(s.label) << ','
       << v(s.prices.p_N) << ',' << v(s.prices.p_NoN) << ',' << v(s.prices.p_tilde) << ','
       << (has ? std::to_string(s.quality.z) : "nan") << ',' << v(s.split.n_N) << ','
       << v(s.split.n_NoN) << ',' << v(s.pi_N) << ',' << v(s.pi_NoN) << ',' << v(s.pi_CP)
       << ',' << v(s.euw) << ',' << fmt(b.prices.p_N) << ',' << fmt(b.prices.p_NoN) << ','
       << fmt(b.split.n_N) << ',' << fmt(b.split.n_NoN) << ',' << fmt(b.pi_N) << ','
       << fmt(b.pi_NoN) << ',' << fmt(b.pi_CP) << ',' << fmt(b.euw) << ',' << fmt(c.d_p_N)
       << ',' << fmt(c.d_p_NoN) << ',' << fmt(c.d_pi_N) << ',' << fmt(c.d_pi_NoN) << ','
       << fmt(c.d_pi_CP) << ',' << fmt(c.d_euw) << ',' << (c.cp_equal ? 1 : 0) << ','
       << fmt(c.discount_closed) << ',' << (s.multiple ? 1 : 0) << '\n';
  }
}

void write_region_map(std::ostream& os, const SweepSpec& spec,
                      const std::vector<SweepRow>& rows) {
  const int nx = spec.x.steps;
  for (size_t k = 0; k < rows.size(); ++k) {
    os << fmt(rows[k].x) << ' ' << fmt(rows[k].y) << ' ' << label_code(rows[k].cmp.spne.label)
       << '\n';
    if ((k + 1) % nx == 0) os << '\n';
  }
}

}  // namespace netneq
