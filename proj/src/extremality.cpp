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

#include "groupcut/extremality.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

#include "groupcut/constructions.hpp"
#include "groupcut/linalg.hpp"
#include "groupcut/parallel.hpp"

namespace groupcut {

namespace {

using Polygon = std::vector<Point2>;

// Keeps the part of `poly` where sign * (x + y - c) >= 0.
Polygon clip_sum(const Polygon& poly, const Rational& c, int sign) {
  Polygon out;
  const auto side = [&](const Point2& p) { return (p.first + p.second - c) * Rational(sign); };
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point2& p = poly[i];
    const Point2& q = poly[(i + 1) % poly.size()];
    const Rational sp = side(p);
    const Rational sq = side(q);
    if (sp.sign() >= 0) out.push_back(p);
    if ((sp.sign() > 0 && sq.sign() < 0) || (sp.sign() < 0 && sq.sign() > 0)) {
      const Rational t = sp / (sp - sq);
      out.emplace_back(p.first + t * (q.first - p.first), p.second + t * (q.second - p.second));
    }
  }
  Polygon dedup;
  for (const Point2& p : out) {
    if (dedup.empty() || dedup.back() != p) dedup.push_back(p);
  }
  while (dedup.size() > 1 && dedup.front() == dedup.back()) dedup.pop_back();
  return dedup;
}

AdditiveFace make_face(Polygon poly) {
  AdditiveFace face;
  Rational xl = poly[0].first, xh = xl, yl = poly[0].second, yh = yl;
  Rational sl = xl + yl, sh = sl;
  for (const Point2& p : poly) {
    xl = min(xl, p.first);
    xh = max(xh, p.first);
    yl = min(yl, p.second);
    yh = max(yh, p.second);
    sl = min(sl, p.first + p.second);
    sh = max(sh, p.first + p.second);
  }
  face.vertices = std::move(poly);
  face.x_projection = Interval(xl, xh);
  face.y_projection = Interval(yl, yh);
  face.sum_projection = Interval(sl, sh);
  return face;
}

// First point of U x V (in the vertex order below) where delta is nonzero.
std::optional<Point2> rectangle_defect(const PeriodicPWL& f, const Interval& u, const Interval& v) {
  const std::vector<Rational> xs = breakpoints_within(f, u);
  const std::vector<Rational> ys = breakpoints_within(f, v);
  const std::vector<Rational> sums = breakpoints_within(f, u + v);
  for (const Rational& x : xs) {
    for (const Rational& y : ys) {
      if (!delta(f, x, y).is_zero()) return Point2{x, y};
    }
  }
  for (const Rational& c : sums) {
    for (const Rational& x : xs) {
      const Rational y = c - x;
      if (v.contains(y) && !delta(f, x, y).is_zero()) return Point2{x, y};
    }
    for (const Rational& y : ys) {
      const Rational x = c - y;
      if (u.contains(x) && !delta(f, x, y).is_zero()) return Point2{x, y};
    }
  }
  return std::nullopt;
}

// Slope of f on `interval` if f is affine there.
std::optional<Rational> affine_slope(const PeriodicPWL& f, const Interval& interval) {
  if (interval.degenerate()) return std::nullopt;
  const std::vector<Rational> xs = breakpoints_within(f, interval);
  const Rational slope = (f(interval.hi) - f(interval.lo)) / interval.length();
  for (const Rational& x : xs) {
    if (f(x) != f(interval.lo) + slope * (x - interval.lo)) return std::nullopt;
  }
  return slope;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
  std::size_t find(std::size_t i) {
    while (parent_[i] != i) {
      parent_[i] = parent_[parent_[i]];
      i = parent_[i];
    }
    return i;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

EqualityStructure equality_structure(const PeriodicPWL& f) {
  if (!check_subadditive(f).passed()) throw std::invalid_argument("equality structure needs a subadditive function");
  EqualityStructure es;
  es.function = f;
  for (const Point2& p : subadditivity_vertices(f)) {
    if (delta(f, p.first, p.second).is_zero()) es.additive_vertices.push_back(p);
  }

  std::vector<Rational> ts = f.breakpoints();
  ts.push_back(Rational(1));
  const std::size_t n = f.size();
  std::vector<std::vector<AdditiveFace>> per_square(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    const std::size_t i = idx / n;
    const std::size_t j = idx % n;
    const Polygon square{{ts[i], ts[j]}, {ts[i + 1], ts[j]}, {ts[i + 1], ts[j + 1]}, {ts[i], ts[j + 1]}};
    const std::vector<Rational> cuts = breakpoints_within(f, Interval(ts[i] + ts[j], ts[i + 1] + ts[j + 1]));
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
      const Polygon cell = clip_sum(clip_sum(square, cuts[c], 1), cuts[c + 1], -1);
      if (cell.size() < 3) continue;
      const bool additive = std::all_of(cell.begin(), cell.end(),
                                        [&](const Point2& p) { return delta(f, p.first, p.second).is_zero(); });
      if (additive) per_square[idx].push_back(make_face(cell));
    }
  });
  for (auto& faces : per_square) {
    for (auto& face : faces) es.additive_faces.push_back(std::move(face));
  }
  return es;
}

bool rectangle_additive(const PeriodicPWL& f, const Interval& u, const Interval& v) {
  return !rectangle_defect(f, u, v).has_value();
}

AffinityConstraint interval_lemma_apply(const EqualityStructure& structure, const Interval& u, const Interval& v) {
  if (u.degenerate() || v.degenerate()) throw std::invalid_argument("interval lemma needs nondegenerate intervals");
  if (!rectangle_additive(structure.function, u, v)) {
    throw std::invalid_argument("U x V is not contained in the equality set");
  }
  return {u, v, u + v};
}

bool satisfies_equalities(const EqualityStructure& structure, const PeriodicPWL& g) {
  for (const Point2& p : structure.additive_vertices) {
    if (!delta(g, p.first, p.second).is_zero()) return false;
  }
  for (const AdditiveFace& face : structure.additive_faces) {
    for (const Point2& p : face.vertices) {
      if (!delta(g, p.first, p.second).is_zero()) return false;
    }
  }
  return true;
}

const char* to_string(PerturbationVerdict v) {
  switch (v) {
    case PerturbationVerdict::certified_unique:
      return "certified_unique";
    case PerturbationVerdict::not_unique:
      return "not_unique";
    case PerturbationVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

PerturbationTestResult restricted_facet_test(const PeriodicPWL& f, const Rational& b, long refinement_denominator) {
  if (refinement_denominator < 1) throw std::invalid_argument("refinement denominator must be >= 1");
  const Certificate minimal = check_minimal(f, b);
  if (!minimal.passed()) throw std::invalid_argument("restricted facet test needs a minimal function");
  const EqualityStructure es = equality_structure(f);

  std::vector<Rational> grid = f.breakpoints();
  grid.push_back(b.frac());
  for (long p = 0; p < refinement_denominator; ++p) grid.emplace_back(p, refinement_denominator);
  for (const Point2& v : es.additive_vertices) {
    grid.push_back(v.first);
    grid.push_back(v.second);
    grid.push_back((v.first + v.second).frac());
  }
  for (const AdditiveFace& face : es.additive_faces) {
    for (const Interval* I : {&face.x_projection, &face.y_projection, &face.sum_projection}) {
      grid.push_back(I->lo.frac());
      grid.push_back(I->hi.frac());
    }
  }
  const std::size_t before = grid.size();
  for (std::size_t i = 0; i < before; ++i) grid.push_back((b - grid[i]).frac());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  const std::size_t m = grid.size();
  const auto index_of = [&](const Rational& x) {
    const auto it = std::lower_bound(grid.begin(), grid.end(), x);
    if (it == grid.end() || *it != x) throw std::logic_error("point missing from the perturbation grid");
    return static_cast<std::size_t>(it - grid.begin());
  };
  const auto right_end = [&](std::size_t s) { return s + 1 < m ? grid[s + 1] : Rational(1); };

  // Segment s is [grid[s], grid[s + 1]]; segments forced to share a slope
  // are merged into one unknown.
  DisjointSets classes(m);
  const auto unite_range = [&](const Interval& range) {
    // range lies in [0, 2]; walk it one unit period at a time.
    const mpz_class first = range.lo.floor();
    for (mpz_class n = first; Rational(n, mpz_class(1)) < range.hi; ++n) {
      const Rational shift(n, mpz_class(1));
      const Rational lo = max(range.lo, shift) - shift;
      const Rational hi = min(range.hi, shift + 1) - shift;
      if (lo >= hi) continue;
      const std::size_t s0 = index_of(lo);
      for (std::size_t s = s0 + 1; s < m && grid[s] < hi; ++s) classes.unite(s0, s);
    }
  };
  std::optional<std::size_t> anchor;
  for (const AdditiveFace& face : es.additive_faces) {
    unite_range(face.x_projection);
    unite_range(face.y_projection);
    unite_range(face.sum_projection);
    // The three projections carry one common slope.
    const std::size_t sx = index_of(face.x_projection.lo.frac());
    classes.unite(sx, index_of(face.y_projection.lo.frac()));
    classes.unite(sx, index_of(face.sum_projection.lo.frac()));
    anchor = sx;
  }
  for (std::size_t s = 0; s < m; ++s) {
    // theta(x) + theta(b - x) = 1 gives theta'(x) = theta'(b - x).
    classes.unite(s, index_of((b - right_end(s)).frac()));
  }

  std::vector<std::size_t> column(m);
  std::vector<std::size_t> roots;
  for (std::size_t s = 0; s < m; ++s) {
    const std::size_t r = classes.find(s);
    const auto it = std::find(roots.begin(), roots.end(), r);
    column[s] = static_cast<std::size_t>(it - roots.begin());
    if (it == roots.end()) roots.push_back(r);
  }
  const std::size_t unknowns = roots.size();

  // theta(grid[i]) as a linear form in the class slopes; entry m is theta(1).
  std::vector<std::vector<Rational>> value_form(m + 1, std::vector<Rational>(unknowns));
  for (std::size_t s = 0; s < m; ++s) {
    value_form[s + 1] = value_form[s];
    value_form[s + 1][column[s]] += right_end(s) - grid[s];
  }
  const auto form_at = [&](const Rational& x) -> const std::vector<Rational>& { return value_form[index_of(x.frac())]; };

  // The class slopes of f itself, checked for consistency.
  std::vector<std::optional<Rational>> f_slope(unknowns);
  for (std::size_t s = 0; s < m; ++s) {
    const Rational slope = (f(right_end(s)) - f(grid[s])) / (right_end(s) - grid[s]);
    auto& known = f_slope[column[s]];
    if (known && *known != slope) throw std::logic_error("f does not satisfy its own face constraints");
    known = slope;
  }

  RowEchelon system(unknowns);
  std::size_t rows = 0;
  const auto add = [&](std::vector<Rational> row, const Rational& rhs) {
    Rational lhs;
    for (std::size_t c = 0; c < unknowns; ++c) lhs += row[c] * *f_slope[c];
    if (lhs != rhs) throw std::logic_error("f violates a constraint of the perturbation system");
    system.add_row(std::move(row));
    ++rows;
  };
  add(value_form[m], Rational(0));
  add(form_at(b), Rational(1));
  for (const Rational& g : grid) {
    std::vector<Rational> row = form_at(g);
    const auto& other = form_at(b - g);
    for (std::size_t c = 0; c < unknowns; ++c) row[c] += other[c];
    add(std::move(row), Rational(1));
  }
  for (const Point2& v : es.additive_vertices) {
    std::vector<Rational> row = form_at(v.first);
    const auto& y = form_at(v.second);
    const auto& sum = form_at(v.first + v.second);
    for (std::size_t c = 0; c < unknowns; ++c) row[c] += y[c] - sum[c];
    add(std::move(row), Rational(0));
  }

  PerturbationTestResult result;
  result.dimension = system.nullity();
  result.grid_points = m;
  result.slope_classes = unknowns;
  result.constraint_rows = rows;
  for (const auto& direction : system.nullspace()) {
    std::vector<Rational> values(m);
    Rational acc;
    for (std::size_t s = 0; s < m; ++s) {
      values[s] = acc;
      acc += direction[column[s]] * (right_end(s) - grid[s]);
    }
    result.basis_functions.push_back(PeriodicPWL::from_lists(grid, std::move(values)));
  }
  if (result.dimension == 0) {
    result.verdict = PerturbationVerdict::certified_unique;
  } else if (!anchor) {
    result.verdict = PerturbationVerdict::inconclusive;
  } else {
    result.verdict = PerturbationVerdict::not_unique;
  }
  result.scope =
      "restricted to continuous piecewise-linear theta with breakpoints on a grid of " + std::to_string(m) +
      " points (denominator " + std::to_string(refinement_denominator) +
      "); a certified_unique verdict holds within this class only and is not a proof of the facet property "
      "against arbitrary perturbations";
  return result;
}

namespace {

class Replay {
 public:
  explicit Replay(const PeriodicPWL& f) : f_(f) {}

  bool failed() const { return failure_.has_value(); }
  std::size_t checked() const { return checked_; }
  const Witness& failure() const { return *failure_; }

  void require(bool ok, const std::string& fact, std::optional<Interval> interval = std::nullopt) {
    if (failed()) return;
    ++checked_;
    if (ok) return;
    Witness w;
    w.condition = "replay";
    w.interval = std::move(interval);
    w.detail = fact;
    failure_ = std::move(w);
  }

  void value(const Rational& x, const Rational& expected, const std::string& fact) {
    if (failed()) return;
    ++checked_;
    const Rational got = f_(x);
    if (got == expected) return;
    Witness w;
    w.condition = "replay";
    w.x = x;
    w.value = got;
    w.detail = fact + ": expected " + expected.str();
    failure_ = std::move(w);
  }

  void additive(const Interval& u, const Interval& v, const std::string& fact) {
    if (failed()) return;
    ++checked_;
    const auto defect = rectangle_defect(f_, u, v);
    if (!defect) return;
    Witness w;
    w.condition = "replay";
    w.x = defect->first;
    w.y = defect->second;
    w.value = delta(f_, defect->first, defect->second);
    w.interval = u;
    w.detail = fact + ": delta != 0";
    failure_ = std::move(w);
  }

 private:
  const PeriodicPWL& f_;
  std::size_t checked_ = 0;
  std::optional<Witness> failure_;
};

std::string with_j(const std::string& step, int j) { return step + " j=" + std::to_string(j); }

}  // namespace

Certificate replay_pi_k_facet_proof(int k, const Rational& b) {
  if (k < 3) throw std::domain_error("replay needs k >= 3");
  return replay_pi_k_facet_proof(pi_k(k, b), k, b);
}

Certificate replay_pi_k_facet_proof(const PeriodicPWL& f, int k, const Rational& b) {
  if (k < 3) throw std::domain_error("replay needs k >= 3");
  const IntervalSystem top = interval_system(k, b);
  const Rational one(1);
  const Rational eighth(1, 8);
  Replay r(f);

  // (a)
  const Interval w((one + b) / 2, one);
  const Interval ww = w + w;
  r.require(ww.lo - one == top[6].lo && ww.hi - one == top[6].hi, "(a) W + W = I6 u {1} mod 1", ww);
  r.additive(w, w, "(a) W x W additive");
  r.value(Rational(0), Rational(0), "(a) f(0)");
  r.value(one, Rational(0), "(a) f(1)");
  r.value(b, one, "(a) f(b)");

  // (b)
  const IntervalSystem level3 = interval_system(3, b);
  const Interval u_b(b / 4, b * Rational(3, 8));
  r.require(level3[3].contains(u_b), "(b) U inside I^3_3", u_b);
  r.require(level3[3].contains(u_b + u_b), "(b) U + U inside I^3_3", u_b + u_b);
  r.additive(u_b, u_b, "(b) U x U additive");
  r.value(b / 4, Rational(1, 4), "(b) f(b/4)");
  r.value(b / 2, Rational(1, 2), "(b) f(b/2)");
  r.value(b * Rational(3, 4), Rational(3, 4), "(b) f(3b/4)");

  // (c)
  for (int j = 3; j <= k; ++j) {
    const IntervalSystem sys = interval_system(j, b);
    const Rational a = sys.width();
    const Interval u(a * Rational(3, 2), 2 * a);
    const Interval v(one - a / 2, one);
    const Interval uv = u + v;
    r.require(uv.lo - one == sys[2].lo && uv.hi - one == sys[2].hi, with_j("(c) U + V = I^j_2 mod 1", j), uv);
    r.require(sys[2].contains(u), with_j("(c) U inside I^j_2", j), u);
    r.require(top[6].contains(v), with_j("(c) V inside I6", j), v);
    r.additive(u, v, with_j("(c) U x V additive", j));
    const auto s2 = affine_slope(f, sys[2]);
    const auto sv = affine_slope(f, v);
    r.require(s2.has_value(), with_j("(c) f affine on I^j_2", j), sys[2]);
    r.require(sv.has_value(), with_j("(c) f affine on V", j), v);
    r.require(s2 && sv && *s2 == *sv, with_j("(c) equal slopes on I^j_2 and V", j), sys[2]);
  }

  // (d)
  for (int j = 3; j <= k - 1; ++j) {
    const Rational a = interval_system(j, b).width();
    const Rational a1 = a * eighth;
    const Interval star(2 * a1, a);
    const Interval u(2 * a1, 4 * a1);
    const Interval uu = u + u;
    r.require(u.lo == star.lo && u.hi == uu.lo && uu.hi == star.hi, with_j("(d) U u (U + U) = I*", j), star);
    for (int m = j + 1; m <= k + 1; ++m) {
      r.require(interval_system(m, b)[3].contains(star), with_j("(d) I* inside I^m_3, m=" + std::to_string(m), j),
                star);
    }
    r.additive(u, u, with_j("(d) U x U additive", j));
    const auto s = affine_slope(f, star);
    const Rational level = level_slope(j, b);
    r.require(s && *s == level && f(star.lo) == level * star.lo, with_j("(d) f = s_j x on I*", j), star);
    r.require(4 * f(2 * a1) == 2 * f(4 * a1), with_j("(d) 4 f(2a') = 2 f(4a')", j), star);
    r.require(2 * f(4 * a1) == f(8 * a1) && f(8 * a1) == f(a), with_j("(d) 2 f(4a') = f(a)", j), star);
  }

  // (e)
  const Interval u_e(Rational(0), top.width() / 2);
  r.require(u_e + u_e == top[1], "(e) U + U = I^k_1", u_e + u_e);
  r.additive(u_e, u_e, "(e) U x U additive");

  if (r.failed()) return Certificate::fail(r.failure(), r.checked());
  return Certificate::pass(r.checked(),
                           "numeric facts of the facet argument verified exactly; the argument itself, which "
                           "quantifies over arbitrary perturbations, is not machine-checked");
}

Certificate two_slope_shortcut(const PeriodicPWL& f, const Rational& b) {
  const Certificate minimal = check_minimal(f, b);
  if (!minimal.passed()) return Certificate::fail(*minimal.witness, minimal.checked);
  const std::set<Rational> s = slopes(f);
  if (s.size() != 2) {
    Witness w;
    w.condition = "slope-count";
    w.value = Rational(static_cast<long>(s.size()));
    w.detail = "two-slope shortcut needs exactly 2 slopes";
    return Certificate::fail(std::move(w), minimal.checked + 1);
  }
  return Certificate::pass(minimal.checked + 1, "minimal continuous 2-slope function: facet");
}

}  // namespace groupcut
