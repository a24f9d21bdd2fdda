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

#include "groupcut/pwl.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupcut {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (hi < lo) throw std::invalid_argument("interval with hi < lo: [" + lo.str() + ", " + hi.str() + "]");
}

Interval operator+(const Interval& a, const Interval& b) { return Interval(a.lo + b.lo, a.hi + b.hi); }

PeriodicPWL::PeriodicPWL() : breakpoints_{Rational(0)}, values_{Rational(0)} {}

PeriodicPWL::PeriodicPWL(std::vector<Rational> breakpoints, std::vector<Rational> values, bool canonicalize)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (!canonicalize || breakpoints_.size() < 2) return;
  const std::size_t m = breakpoints_.size();
  std::vector<Rational> bps{breakpoints_[0]};
  std::vector<Rational> vals{values_[0]};
  for (std::size_t i = 1; i < m; ++i) {
    const Rational& t_next = i + 1 < m ? breakpoints_[i + 1] : Rational(1);
    const Rational& v_next = i + 1 < m ? values_[i + 1] : values_[0];
    const Rational left = (values_[i] - vals.back()) / (breakpoints_[i] - bps.back());
    const Rational right = (v_next - values_[i]) / (t_next - breakpoints_[i]);
    if (left == right) continue;
    bps.push_back(breakpoints_[i]);
    vals.push_back(values_[i]);
  }
  breakpoints_ = std::move(bps);
  values_ = std::move(vals);
}

PeriodicPWL PeriodicPWL::from_points(std::vector<std::pair<Rational, Rational>> points) {
  if (points.empty()) throw std::invalid_argument("periodic function needs at least one breakpoint");
  for (auto& p : points) p.first = p.first.frac();
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Rational> bps;
  std::vector<Rational> vals;
  for (auto& [x, v] : points) {
    if (!bps.empty() && bps.back() == x) {
      if (vals.back() != v) {
        throw std::invalid_argument("conflicting values at x = " + x.str() + ": " + vals.back().str() +
                                    " vs " + v.str());
      }
      continue;
    }
    bps.push_back(std::move(x));
    vals.push_back(std::move(v));
  }
  if (!bps.front().is_zero()) throw std::invalid_argument("breakpoint 0 is missing");
  return PeriodicPWL(std::move(bps), std::move(vals), true);
}

PeriodicPWL PeriodicPWL::from_lists(std::vector<Rational> breakpoints, std::vector<Rational> values) {
  if (breakpoints.size() != values.size()) {
    throw std::invalid_argument("breakpoints and values differ in length");
  }
  if (breakpoints.empty() || !breakpoints.front().is_zero()) {
    throw std::invalid_argument("breakpoint 0 is missing");
  }
  for (std::size_t i = 0; i < breakpoints.size(); ++i) {
    if (breakpoints[i].sign() < 0 || breakpoints[i] >= Rational(1)) {
      throw std::invalid_argument("breakpoint " + breakpoints[i].str() + " lies outside [0,1)");
    }
    if (i > 0 && !(breakpoints[i - 1] < breakpoints[i])) {
      throw std::invalid_argument("breakpoints are not strictly increasing at " + breakpoints[i].str());
    }
  }
  return PeriodicPWL(std::move(breakpoints), std::move(values), true);
}

PeriodicPWL PeriodicPWL::constant(const Rational& c) { return PeriodicPWL({Rational(0)}, {c}, false); }

Rational PeriodicPWL::operator()(const Rational& x) const {
  const Rational t = x.frac();
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  if (breakpoints_[i] == t) return values_[i];
  const bool last = i + 1 == breakpoints_.size();
  const Rational& t_next = last ? Rational(1) : breakpoints_[i + 1];
  const Rational& v_next = last ? values_[0] : values_[i + 1];
  return values_[i] + (v_next - values_[i]) * (t - breakpoints_[i]) / (t_next - breakpoints_[i]);
}

std::vector<Piece> PeriodicPWL::pieces() const {
  std::vector<Piece> out;
  out.reserve(breakpoints_.size());
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const bool last = i + 1 == breakpoints_.size();
    Piece p;
    p.lo = breakpoints_[i];
    p.hi = last ? Rational(1) : breakpoints_[i + 1];
    p.value_lo = values_[i];
    p.value_hi = last ? values_[0] : values_[i + 1];
    p.slope = (p.value_hi - p.value_lo) / (p.hi - p.lo);
    out.push_back(std::move(p));
  }
  return out;
}

PeriodicPWL PeriodicPWL::refined(std::span<const Rational> extra) const {
  std::vector<Rational> xs(breakpoints_);
  for (const Rational& e : extra) xs.push_back(e.frac());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Rational> vals;
  vals.reserve(xs.size());
  for (const Rational& x : xs) vals.push_back((*this)(x));
  return PeriodicPWL(std::move(xs), std::move(vals), false);
}

PeriodicPWL PeriodicPWL::canonical() const { return PeriodicPWL(breakpoints_, values_, true); }

bool operator==(const PeriodicPWL& a, const PeriodicPWL& b) {
  const PeriodicPWL ca = a.canonical();
  const PeriodicPWL cb = b.canonical();
  return ca.breakpoints_ == cb.breakpoints_ && ca.values_ == cb.values_;
}

Rational eval(const PeriodicPWL& f, const Rational& x) { return f(x); }

Rational delta(const PeriodicPWL& f, const Rational& x, const Rational& y) { return f(x) + f(y) - f(x + y); }

std::set<Rational> slopes(const PeriodicPWL& f) {
  std::set<Rational> out;
  for (const Piece& p : f.pieces()) out.insert(p.slope);
  return out;
}

PeriodicPWL reflect(const PeriodicPWL& f) {
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(f.size());
  pts.emplace_back(Rational(0), f.values()[0]);
  for (std::size_t i = 1; i < f.size(); ++i) pts.emplace_back(Rational(1) - f.breakpoints()[i], f.values()[i]);
  return PeriodicPWL::from_points(std::move(pts));
}

std::vector<Rational> breakpoints_within(const PeriodicPWL& f, const Interval& interval) {
  std::vector<Rational> xs{interval.lo, interval.hi};
  const mpz_class first = interval.lo.floor();
  const mpz_class last = interval.hi.floor();
  for (mpz_class n = first; n <= last; ++n) {
    const Rational shift(n, mpz_class(1));
    for (const Rational& t : f.breakpoints()) {
      const Rational x = t + shift;
      if (interval.contains(x)) xs.push_back(x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

bool equal_on(const PeriodicPWL& f, const PeriodicPWL& g, const Interval& interval) {
  std::vector<Rational> xs = breakpoints_within(f, interval);
  const std::vector<Rational> more = breakpoints_within(g, interval);
  xs.insert(xs.end(), more.begin(), more.end());
  return std::all_of(xs.begin(), xs.end(), [&](const Rational& x) { return f(x) == g(x); });
}

std::pair<PeriodicPWL, PeriodicPWL> common_refinement(const PeriodicPWL& f, const PeriodicPWL& g) {
  return {f.refined(g.breakpoints()), g.refined(f.breakpoints())};
}

PeriodicPWL linear_combine(const Rational& c1, const PeriodicPWL& f, const Rational& c2, const PeriodicPWL& g) {
  const PeriodicPWL rf = f.refined(g.breakpoints());
  std::vector<std::pair<Rational, Rational>> pts;
  pts.reserve(rf.size());
  for (const Rational& x : rf.breakpoints()) pts.emplace_back(x, c1 * f(x) + c2 * g(x));
  return PeriodicPWL::from_points(std::move(pts));
}

}  // namespace groupcut
