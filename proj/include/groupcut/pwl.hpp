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

// Continuous piecewise-linear functions on R that are periodic modulo Z.
//
// A PeriodicPWL is stored as (breakpoint, value) pairs on [0, 1). The last
// piece runs from the final breakpoint to abscissa 1, where it meets
// values[0] again, so continuity is structural. Every public constructor
// normalizes abscissae into [0, 1) and merges adjacent pieces of equal
// slope, which makes the breakpoint list a canonical form.

#include <cstddef>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "groupcut/rational.hpp"

namespace groupcut {

struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  // Throws std::invalid_argument if hi < lo.
  Interval(Rational lo_, Rational hi_);

  bool degenerate() const { return lo == hi; }
  Rational length() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

// Minkowski sum [a, b] + [c, d] = [a + c, b + d].
Interval operator+(const Interval& a, const Interval& b);

struct Piece {
  Rational lo;  // left breakpoint, in [0, 1)
  Rational hi;  // next breakpoint, or 1 for the wrap piece
  Rational value_lo;
  Rational value_hi;
  Rational slope;
};

class PeriodicPWL {
 public:
  // The zero function.
  PeriodicPWL();

  // Builds from arbitrary (x, value) samples. Abscissae are reduced mod 1;
  // samples landing on the same point must agree. Breakpoint 0 must be
  // present after reduction. Throws std::invalid_argument otherwise.
  static PeriodicPWL from_points(std::vector<std::pair<Rational, Rational>> points);

  // Strict form used by deserialization: breakpoints must already be
  // strictly increasing in [0, 1) and start at 0.
  static PeriodicPWL from_lists(std::vector<Rational> breakpoints, std::vector<Rational> values);

  static PeriodicPWL constant(const Rational& c);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  std::size_t size() const { return breakpoints_.size(); }

  Rational operator()(const Rational& x) const;

  // Pieces in order of increasing abscissa, the last one ending at 1.
  std::vector<Piece> pieces() const;

  // Re-expression over the union of this function's breakpoints and
  // `extra` (taken mod 1). The result evaluates identically but is not in
  // canonical form.
  PeriodicPWL refined(std::span<const Rational> extra) const;

  // Same function with collinear breakpoints merged.
  PeriodicPWL canonical() const;

  // Pointwise equality.
  friend bool operator==(const PeriodicPWL& a, const PeriodicPWL& b);

 private:
  PeriodicPWL(std::vector<Rational> breakpoints, std::vector<Rational> values, bool canonicalize);

  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

Rational eval(const PeriodicPWL& f, const Rational& x);

// f(x) + f(y) - f(x + y).
Rational delta(const PeriodicPWL& f, const Rational& x, const Rational& y);

std::set<Rational> slopes(const PeriodicPWL& f);

// g(x) = f(-x).
PeriodicPWL reflect(const PeriodicPWL& f);

// True iff f and g agree at every point of `interval` (any real interval,
// not necessarily inside [0, 1)).
bool equal_on(const PeriodicPWL& f, const PeriodicPWL& g, const Interval& interval);

std::pair<PeriodicPWL, PeriodicPWL> common_refinement(const PeriodicPWL& f, const PeriodicPWL& g);

// c1 * f + c2 * g.
PeriodicPWL linear_combine(const Rational& c1, const PeriodicPWL& f, const Rational& c2,
                           const PeriodicPWL& g);

// Every translate t + n (n integer) of the breakpoints of f inside [lo, hi],
// sorted, together with lo and hi themselves.
std::vector<Rational> breakpoints_within(const PeriodicPWL& f, const Interval& interval);

}  // namespace groupcut
