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

// Exact decision procedures for minimality of a one-dimensional periodic
// function and for the structural claims made about pi_k. Every check
// returns a Certificate; a failing certificate carries an exact witness
// that reproduces the violation when re-evaluated.

#include <utility>
#include <vector>

#include "groupcut/certificate.hpp"
#include "groupcut/pwl.hpp"
#include "groupcut/rational.hpp"

namespace groupcut {

using Point2 = std::pair<Rational, Rational>;

// Vertices of the subadditivity complex of f on the torus [0,1)^2, sorted
// lexicographically and deduplicated. With B the breakpoints of f these are
// (u, v), (u, w - u) and (w - v, v) for u, v, w in B, reduced mod 1.
//
// The complex is cut out by the lines x = u, y = v and x + y = w (mod 1).
// On each of its cells the three maps x, y and x + y stay inside a single
// piece of f, so delta(f, x, y) is affine there and its minimum over a
// cell is attained at a vertex. Every vertex is the crossing of two lines
// from different families, which gives exactly the three families above.
std::vector<Point2> subadditivity_vertices(const PeriodicPWL& f);

// Decides f(x) + f(y) >= f(x + y) for all real x, y. The witness is the
// lexicographically smallest violating vertex.
Certificate check_subadditive(const PeriodicPWL& f);

// Decides f(x) + f(b - x) = 1 for all x. Both sides are piecewise linear
// with breakpoints in B and b - B, so checking those points suffices.
Certificate check_symmetry(const PeriodicPWL& f, const Rational& b);

// f >= 0 everywhere, decided at the breakpoints.
Certificate check_nonnegative(const PeriodicPWL& f);

// Zero at integers, nonnegative, subadditive and symmetric, checked in that
// order. Reports the first failing condition only.
Certificate check_minimal(const PeriodicPWL& f, const Rational& b);

// f(0) = 0 and f > 0 on (0, 1).
Certificate check_zero_set(const PeriodicPWL& f);

// slopes(f) = {-1/(1-b)} U {(2^(i-2) - b)/(b - b^2) : i = 2..k}. For k >= 3
// additionally every one of the first k - 2 level slopes occurs on I^k_3,
// nothing else occurs there except -1/(1-b) (present for k >= 4, inherited
// from I^(k-1)_2 and I^(k-1)_4), and the slope on I^k_6 is -1/(1-b).
Certificate check_slope_census(const PeriodicPWL& f, int k, const Rational& b);

// delta(f, x, y) >= 0 on the grid {p / cap : 0 <= p < cap}^2. A necessary
// condition only. The witness is the lexicographically smallest violating
// grid pair. Throws std::invalid_argument if cap < 2.
Certificate brute_force_subadditive(const PeriodicPWL& f, long cap);

}  // namespace groupcut
