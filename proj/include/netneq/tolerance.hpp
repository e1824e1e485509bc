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

#ifndef NETNEQ_TOLERANCE_HPP_
#define NETNEQ_TOLERANCE_HPP_

#include <algorithm>
#include <cmath>

namespace netneq {

// Relative tolerance shared by every open/closed interval decision.
inline constexpr double kEps = 1e-9;

inline double tol(double scale) { return kEps * std::max(1.0, std::abs(scale)); }

// a > b by more than the tolerance. Every other predicate is derived from
// this one so that complementary branches stay exact negations.
inline bool gt(double a, double b) {
  return a > b + tol(std::max(std::abs(a), std::abs(b)));
}
inline bool lt(double a, double b) { return gt(b, a); }
inline bool ge(double a, double b) { return !gt(b, a); }
inline bool le(double a, double b) { return !gt(a, b); }
inline bool near(double a, double b) { return !gt(a, b) && !gt(b, a); }

}  // namespace netneq

#endif  // NETNEQ_TOLERANCE_HPP_
