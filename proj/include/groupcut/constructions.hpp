// Copyright 2026 The groupcut Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// The concrete function families: the Gomory mixed-integer function, the
// recursive k-slope functions pi_k, truncations of their uniform limit
// pi_infinity, and the reflected variants used for b in [1/2, 1).

#include <array>

#include "groupcut/pwl.hpp"
#include "groupcut/rational.hpp"

namespace groupcut {

// The six consecutive intervals I^k_1 .. I^k_6 used to build pi_k from
// pi_{k-1}. With a = b (1/8)^(k-2):
//   I1 = [0, a], I2 = [a, 2a], I3 = [2a, b - 2a],
//   I4 = [b - 2a, b - a], I5 = [b - a, b], I6 = [b, 1].
// I6 is half-open on the right in the mathematical sense; it is stored
// with hi = 1.
struct IntervalSystem {
  int k = 3;
  Rational b;
  std::array<Interval, 6> intervals;

  // 1-based accessor matching the usual I^k_i numbering.
  const Interval& operator[](int i) const { return intervals.at(static_cast<std::size_t>(i - 1)); }
  // The shrink width b (1/8)^(k-2).
  Rational width() const { return intervals[0].hi; }
};

struct PiInfinityTruncation {
  PeriodicPWL fn;  // pi_K
  int K = 2;
  Rational sup_error_bound;  // 2^(4-3K) (2^K - 4b) / (1 - b)
};

// Throws std::domain_error unless 0 < b < 1.
PeriodicPWL gmi(const Rational& b);

// Throws std::domain_error unless k >= 3 and 0 < b <= 1/2.
IntervalSystem interval_system(int k, const Rational& b);

// The slope (2^(i-2) - b) / (b - b^2) introduced at level i.
Rational level_slope(int i, const Rational& b);

// pi_2 = gmi(b); pi_k is built from pi_{k-1} by the four affine branches
// on I1, I2, I4, I5. Throws std::domain_error unless k >= 2 and
// 0 < b <= 1/2. Throws std::logic_error if the branch values do not meet
// at the interval boundaries.
PeriodicPWL pi_k(int k, const Rational& b);

// Least N >= 3 with (x mod 1) in I^N_3 or I^N_6. Throws std::domain_error
// when x mod 1 is 0 or b, or when b is outside (0, 1/2].
int stabilization_index(const Rational& x, const Rational& b);

// Exact value of the limit function: 0 at integers, 1 at b + Z, otherwise
// pi_N(x) with N the stabilization index.
Rational pi_infinity(const Rational& x, const Rational& b);

// 2^(4-3K) (2^K - 4b) / (1 - b).
Rational pi_infinity_error_bound(int K, const Rational& b);

// Throws std::domain_error unless K >= 2 and 0 < b <= 1/2.
PiInfinityTruncation pi_infinity_truncation(const Rational& b, int K);

// reflect(pi_k(k, 1 - b)), valid for b in [1/2, 1).
PeriodicPWL pi_k_reflected(int k, const Rational& b);

// Dispatches on b: pi_k for b in (0, 1/2], pi_k_reflected for b in (1/2, 1).
PeriodicPWL k_slope_function(int k, const Rational& b);

}  // namespace groupcut
