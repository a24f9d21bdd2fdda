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

#include "groupcut/verification.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

#include "groupcut/constructions.hpp"
#include "groupcut/parallel.hpp"

namespace groupcut {

namespace {

Witness pair_witness(std::string condition, const Rational& x, const Rational& y, Rational value) {
  Witness w;
  w.condition = std::move(condition);
  w.x = x;
  w.y = y;
  w.value = std::move(value);
  return w;
}

Witness point_witness(std::string condition, const Rational& x, Rational value, std::string detail = {}) {
  Witness w;
  w.condition = std::move(condition);
  w.x = x;
  w.value = std::move(value);
  w.detail = std::move(detail);
  return w;
}

std::string set_string(const std::set<Rational>& s) {
  std::string out = "{";
  for (const Rational& r : s) {
    if (out.size() > 1) out += ", ";
    out += r.str();
  }
  return out + "}";
}

}  // namespace

std::vector<Point2> subadditivity_vertices(const PeriodicPWL& f) {
  const auto& bps = f.breakpoints();
  std::vector<Point2> out;
  out.reserve(3 * bps.size() * bps.size());
  for (const Rational& u : bps) {
    for (const Rational& w : bps) {
      out.emplace_back(u, w);
      out.emplace_back(u, (w - u).frac());
      out.emplace_back((w - u).frac(), u);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Certificate check_subadditive(const PeriodicPWL& f) {
  const std::vector<Point2> vertices = subadditivity_vertices(f);
  const auto hit = first_index_where(vertices.size(), [&](std::size_t i) {
    return delta(f, vertices[i].first, vertices[i].second).sign() < 0;
  });
  if (!hit) return Certificate::pass(vertices.size());
  const auto& [x, y] = vertices[*hit];
  return Certificate::fail(pair_witness("subadditivity", x, y, delta(f, x, y)), vertices.size());
}

Certificate check_symmetry(const PeriodicPWL& f, const Rational& b) {
  std::vector<Rational> xs;
  for (const Rational& t : f.breakpoints()) {
    xs.push_back(t);
    xs.push_back((b - t).frac());
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (const Rational& x : xs) {
    const Rational sum = f(x) + f(b - x);
    if (sum != Rational(1)) {
      return Certificate::fail(point_witness("symmetry", x, sum, "f(x) + f(b - x) != 1"), xs.size());
    }
  }
  return Certificate::pass(xs.size());
}

Certificate check_nonnegative(const PeriodicPWL& f) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f.values()[i].sign() < 0) {
      return Certificate::fail(point_witness("nonnegativity", f.breakpoints()[i], f.values()[i]), i + 1);
    }
  }
  return Certificate::pass(f.size());
}

Certificate check_minimal(const PeriodicPWL& f, const Rational& b) {
  std::size_t checked = 1;
  if (!f(0).is_zero()) {
    return Certificate::fail(point_witness("zero-at-integers", Rational(0), f(0)), checked);
  }
  const Certificate nonneg = check_nonnegative(f);
  checked += nonneg.checked;
  if (!nonneg.passed()) return Certificate::fail(*nonneg.witness, checked);
  const Certificate sub = check_subadditive(f);
  checked += sub.checked;
  if (!sub.passed()) return Certificate::fail(*sub.witness, checked);
  const Certificate sym = check_symmetry(f, b);
  checked += sym.checked;
  if (!sym.passed()) return Certificate::fail(*sym.witness, checked);
  return Certificate::pass(checked);
}

Certificate check_zero_set(const PeriodicPWL& f) {
  if (!f(0).is_zero()) return Certificate::fail(point_witness("zero-set", Rational(0), f(0), "f(0) != 0"), 1);
  for (std::size_t i = 1; i < f.size(); ++i) {
    if (f.values()[i].sign() <= 0) {
      return Certificate::fail(point_witness("zero-set", f.breakpoints()[i], f.values()[i], "f <= 0 off the integers"),
                               i + 1);
    }
  }
  // With every nonzero breakpoint positive, each piece has a positive
  // endpoint and is positive on its interior. The only exception is a
  // single piece from 0 to 1.
  if (f.size() == 1) {
    return Certificate::fail(point_witness("zero-set", Rational(1, 2), f(Rational(1, 2)), "f <= 0 off the integers"),
                             2);
  }
  return Certificate::pass(f.size() + f.size());
}

Certificate check_slope_census(const PeriodicPWL& f, int k, const Rational& b) {
  if (k < 2) throw std::domain_error("slope census needs k >= 2");
  const Rational negative = Rational(-1) / (Rational(1) - b);
  std::set<Rational> expected{negative};
  for (int i = 2; i <= k; ++i) expected.insert(level_slope(i, b));
  const std::set<Rational> actual = slopes(f);
  std::size_t checked = 1;
  if (actual != expected) {
    Witness w;
    w.condition = "slope-census";
    w.detail = "slopes " + set_string(actual) + " != expected " + set_string(expected);
    return Certificate::fail(std::move(w), checked);
  }
  if (k >= 3) {
    const IntervalSystem sys = interval_system(k, b);
    std::set<Rational> on_middle;
    std::set<Rational> expected_middle;
    for (int i = 2; i <= k - 1; ++i) expected_middle.insert(level_slope(i, b));
    for (const Piece& p : f.pieces()) {
      if (max(p.lo, sys[3].lo) < min(p.hi, sys[3].hi)) on_middle.insert(p.slope);
      if (max(p.lo, sys[6].lo) < min(p.hi, sys[6].hi) && p.slope != negative) {
        Witness w;
        w.condition = "slope-census";
        w.interval = Interval(p.lo, p.hi);
        w.value = p.slope;
        w.detail = "slope on I6 differs from -1/(1-b)";
        return Certificate::fail(std::move(w), checked + 1);
      }
    }
    checked += 2;
    std::set<Rational> allowed = expected_middle;
    allowed.insert(negative);
    const bool covers = std::includes(on_middle.begin(), on_middle.end(), expected_middle.begin(), expected_middle.end());
    const bool confined = std::includes(allowed.begin(), allowed.end(), on_middle.begin(), on_middle.end());
    if (!covers || !confined) {
      Witness w;
      w.condition = "slope-census";
      w.interval = sys[3];
      w.detail = "slopes on I3 " + set_string(on_middle) + " do not contain " + set_string(expected_middle) +
                 " or use a slope outside " + set_string(allowed);
      return Certificate::fail(std::move(w), checked);
    }
  }
  return Certificate::pass(checked);
}

Certificate brute_force_subadditive(const PeriodicPWL& f, long cap) {
  if (cap < 2) throw std::invalid_argument("denominator cap must be >= 2");
  const auto q = static_cast<std::size_t>(cap);
  std::vector<Rational> grid(q);
  for (std::size_t p = 0; p < q; ++p) grid[p] = f(Rational(static_cast<long>(p), cap));
  const std::size_t checked = q * q;

  // Scale to a common denominator; use machine integers when they fit.
  const mpz_class scale = denominator_lcm(grid);
  std::vector<std::int64_t> scaled(q);
  bool fits = true;
  for (std::size_t p = 0; p < q && fits; ++p) {
    const mpz_class n = grid[p].numerator() * (scale / grid[p].denominator());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 60) {
      fits = false;
    } else {
      scaled[p] = n.get_si();
    }
  }

  const auto row_violates = [&](std::size_t p1, std::size_t p2) {
    const std::size_t s = (p1 + p2) % q;
    if (fits) return scaled[p1] + scaled[p2] < scaled[s];
    return grid[p1] + grid[p2] < grid[s];
  };
  const auto row = first_index_where(q, [&](std::size_t p1) {
    for (std::size_t p2 = 0; p2 < q; ++p2) {
      if (row_violates(p1, p2)) return true;
    }
    return false;
  });
  if (!row) return Certificate::pass(checked);
  for (std::size_t p2 = 0; p2 < q; ++p2) {
    if (row_violates(*row, p2)) {
      const Rational x(static_cast<long>(*row), cap);
      const Rational y(static_cast<long>(p2), cap);
      return Certificate::fail(pair_witness("subadditivity", x, y, delta(f, x, y)), checked);
    }
  }
  throw std::logic_error("brute-force scan lost its witness");
}

}  // namespace groupcut
