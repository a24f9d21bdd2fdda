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

#include "groupcut/constructions.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace groupcut {

namespace {

const Rational kHalf(1, 2);
const Rational kEighth(1, 8);

void require_direct_range(const Rational& b, const char* what) {
  if (b.sign() <= 0 || b > kHalf) {
    throw std::domain_error(std::string("b must lie in (0,1/2] for ") + what + ", got " + b.str());
  }
}

}  // namespace

PeriodicPWL gmi(const Rational& b) {
  if (b.sign() <= 0 || b >= Rational(1)) {
    throw std::domain_error("b must lie in (0,1) for gmi, got " + b.str());
  }
  return PeriodicPWL::from_lists({Rational(0), b}, {Rational(0), Rational(1)});
}

IntervalSystem interval_system(int k, const Rational& b) {
  if (k < 3) throw std::domain_error("interval system needs k >= 3, got " + std::to_string(k));
  require_direct_range(b, "interval_system");
  const Rational a = b * pow(kEighth, k - 2);
  IntervalSystem sys;
  sys.k = k;
  sys.b = b;
  sys.intervals = {Interval(0, a),
                   Interval(a, 2 * a),
                   Interval(2 * a, b - 2 * a),
                   Interval(b - 2 * a, b - a),
                   Interval(b - a, b),
                   Interval(b, 1)};
  return sys;
}

Rational level_slope(int i, const Rational& b) { return (pow(Rational(2), i - 2) - b) / (b - b * b); }

PeriodicPWL pi_k(int k, const Rational& b) {
  if (k < 2) throw std::domain_error("k must be >= 2 for pi-k, got " + std::to_string(k));
  require_direct_range(b, "pi-k");
  PeriodicPWL current = gmi(b);
  for (int level = 3; level <= k; ++level) {
    const IntervalSystem sys = interval_system(level, b);
    const Rational slope = level_slope(level, b);
    const Rational inv = Rational(1) / (Rational(1) - b);
    const Rational four_pow = pow(Rational(4), 2 - level);
    const Rational two_pow = pow(Rational(2), level - 2);

    const auto branch1 = [&](const Rational& x) { return slope * x; };
    const auto branch2 = [&](const Rational& x) { return four_pow * inv - inv * x; };
    const auto branch4 = [&](const Rational& x) { return (Rational(1) - four_pow) * inv - inv * x; };
    const auto branch5 = [&](const Rational& x) { return (Rational(1) - two_pow) * inv + slope * x; };

    // Adjacent branches must meet at every interval boundary.
    const auto meet = [&](const Rational& x, const Rational& left, const Rational& right) {
      if (left != right) {
        throw std::logic_error("pi_" + std::to_string(level) + " is not well defined at x = " + x.str() +
                               ": " + left.str() + " vs " + right.str());
      }
      return left;
    };

    const Rational& a = sys[1].hi;
    std::vector<std::pair<Rational, Rational>> pts;
    pts.emplace_back(Rational(0), branch1(Rational(0)));
    pts.emplace_back(a, meet(a, branch1(a), branch2(a)));
    pts.emplace_back(sys[2].hi, meet(sys[2].hi, branch2(sys[2].hi), current(sys[2].hi)));
    pts.emplace_back(sys[4].lo, meet(sys[4].lo, current(sys[4].lo), branch4(sys[4].lo)));
    pts.emplace_back(sys[5].lo, meet(sys[5].lo, branch4(sys[5].lo), branch5(sys[5].lo)));
    pts.emplace_back(b, meet(b, branch5(b), current(b)));
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Rational& t = current.breakpoints()[i];
      if ((sys[3].lo < t && t < sys[3].hi) || b < t) pts.emplace_back(t, current.values()[i]);
    }
    current = PeriodicPWL::from_points(std::move(pts));
  }
  return current;
}

int stabilization_index(const Rational& x, const Rational& b) {
  require_direct_range(b, "stabilization_index");
  const Rational t = x.frac();
  if (t.is_zero() || t == b) {
    throw std::domain_error("stabilization index is undefined at x = " + x.str() + " (0 or b mod 1)");
  }
  if (t > b) return 3;
  // I^N_3 grows towards (0, b), so the loop terminates.
  for (int n = 3;; ++n) {
    const Rational a = b * pow(kEighth, n - 2);
    if (2 * a <= t && t <= b - 2 * a) return n;
  }
}

Rational pi_infinity(const Rational& x, const Rational& b) {
  require_direct_range(b, "pi-inf");
  const Rational t = x.frac();
  if (t.is_zero()) return 0;
  if (t == b) return 1;
  return pi_k(stabilization_index(t, b), b)(t);
}

Rational pi_infinity_error_bound(int K, const Rational& b) {
  return pow(Rational(2), 4 - 3 * K) * (pow(Rational(2), K) - 4 * b) / (Rational(1) - b);
}

PiInfinityTruncation pi_infinity_truncation(const Rational& b, int K) {
  PiInfinityTruncation out;
  out.fn = pi_k(K, b);
  out.K = K;
  out.sup_error_bound = pi_infinity_error_bound(K, b);
  return out;
}

PeriodicPWL pi_k_reflected(int k, const Rational& b) {
  if (b < kHalf || b >= Rational(1)) {
    throw std::domain_error("b must lie in [1/2,1) for the reflected pi-k, got " + b.str());
  }
  return reflect(pi_k(k, Rational(1) - b));
}

PeriodicPWL k_slope_function(int k, const Rational& b) {
  if (b.sign() <= 0 || b >= Rational(1)) {
    throw std::domain_error("b must lie in (0,1) for pi-k, got " + b.str());
  }
  return b <= kHalf ? pi_k(k, b) : pi_k_reflected(k, b);
}

}  // namespace groupcut
