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

#include "groupcut/seqmerge.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <string>

#include "groupcut/constructions.hpp"
#include "groupcut/parallel.hpp"
#include "groupcut/verification.hpp"

namespace groupcut {

namespace {

Rational sum(const Vec& v) {
  Rational s;
  for (const Rational& x : v) s += x;
  return s;
}

Vec tail(const Vec& x) { return Vec(x.begin() + 1, x.end()); }

void require_arity(const MergedFn& F, const Vec& x) {
  if (x.size() != F.arity()) {
    throw std::invalid_argument("point has dimension " + std::to_string(x.size()) + ", function has arity " +
                                std::to_string(F.arity()));
  }
}

void require_minimal_ingredients(const MergedFn& g) {
  const Certificate c = check_minimal(g.fn(), g.b());
  if (!c.passed()) {
    throw std::invalid_argument("merge ingredient is not minimal for b = " + g.b().str() + " (" +
                                c.witness->condition + ")");
  }
  if (g.kind() == MergedFn::Kind::merge) require_minimal_ingredients(g.inner());
}

void require_half_open(const Rational& b) {
  if (b < Rational(1, 2) || b >= Rational(1)) throw std::domain_error("b must lie in [1/2,1), got " + b.str());
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::size_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(std::uint64_t{trial} >> 32)};
  return std::mt19937_64(seq);
}

Vec random_point(std::mt19937_64& rng, std::size_t arity, long max_denominator) {
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<long> whole(-1, 1);
  std::uniform_int_distribution<long> den(1, std::max(1L, max_denominator));
  Vec x(arity);
  for (Rational& c : x) {
    if (kind(rng) == 0) {
      c = Rational(whole(rng));
    } else {
      const long q = den(rng);
      std::uniform_int_distribution<long> num(-q, 2 * q - 1);
      c = Rational(num(rng), q);
    }
  }
  return x;
}

bool all_integer(const Vec& x) {
  return std::all_of(x.begin(), x.end(), [](const Rational& c) { return c.is_integer(); });
}

Witness point_witness(std::string condition, const Vec& x, Rational value, std::string detail) {
  Witness w;
  w.condition = std::move(condition);
  w.value = std::move(value);
  std::string text = "(";
  for (std::size_t i = 0; i < x.size(); ++i) text += (i ? ", " : "") + x[i].str();
  w.detail = text + ") " + detail;
  return w;
}

}  // namespace

Rational lift_eval(const PeriodicPWL& f, const Rational& b, const Rational& x) { return x - b * f(x); }

Rational group_space_eval(const PsiHandle& psi, const Vec& b_vector, const Vec& x) {
  if (b_vector.size() != x.size()) throw std::invalid_argument("b vector and point differ in dimension");
  const Rational total = sum(b_vector);
  if (total.is_zero()) throw std::domain_error("sum of b must be nonzero");
  return (sum(x) - psi(x)) / total;
}

MergedFn MergedFn::leaf(PeriodicPWL fn, Rational b) {
  return MergedFn(std::make_shared<const Node>(Node{Kind::leaf, std::move(fn), std::move(b), nullptr}));
}

MergedFn MergedFn::merge_unchecked(PeriodicPWL outer, Rational b1, MergedFn inner) {
  return MergedFn(std::make_shared<const Node>(
      Node{Kind::merge, std::move(outer), std::move(b1), std::make_shared<const MergedFn>(std::move(inner))}));
}

const MergedFn& MergedFn::inner() const {
  if (!node_->inner) throw std::logic_error("leaf has no inner function");
  return *node_->inner;
}

std::size_t MergedFn::arity() const { return kind() == Kind::leaf ? 1 : 1 + inner().arity(); }

Vec MergedFn::b_vector() const {
  Vec out{b()};
  if (kind() == Kind::merge) {
    const Vec rest = inner().b_vector();
    out.insert(out.end(), rest.begin(), rest.end());
  }
  return out;
}

MergedFn seq_merge(const PeriodicPWL& f, const Rational& b1, const MergedFn& g) {
  require_minimal_ingredients(MergedFn::leaf(f, b1));
  require_minimal_ingredients(g);
  return MergedFn::merge_unchecked(f, b1, g);
}

Rational eval_merged(const MergedFn& F, const Vec& x) {
  require_arity(F, x);
  if (F.kind() == MergedFn::Kind::leaf) return F.fn()(x[0]);
  const MergedFn& g = F.inner();
  const Vec rest = tail(x);
  const Rational big_b = sum(g.b_vector());
  const Rational inner_value = eval_merged(g, rest);
  const Rational& b1 = F.b();
  return (big_b * inner_value + b1 * F.fn()(x[0] + sum(rest) - big_b * inner_value)) / (b1 + big_b);
}

PsiHandle lifted(const MergedFn& F) {
  if (F.kind() == MergedFn::Kind::leaf) {
    return [F](const Vec& x) { return lift_eval(F.fn(), F.b(), x.at(0)); };
  }
  return [F](const Vec& x) {
    const MergedFn& g = F.inner();
    const Vec rest = tail(x);
    const Rational inner_lift = sum(rest) - sum(g.b_vector()) * eval_definitional(g, rest);
    return lift_eval(F.fn(), F.b(), x[0] + inner_lift);
  };
}

Rational eval_definitional(const MergedFn& F, const Vec& x) {
  require_arity(F, x);
  return group_space_eval(lifted(F), F.b_vector(), x);
}

Certificate check_lift_nondecreasing(const PeriodicPWL& f, const Rational& b) {
  const Rational bound = Rational(1) / b;
  const auto pieces = f.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    if (pieces[i].slope > bound) {
      Witness w;
      w.condition = "lift-monotonicity";
      w.interval = Interval(pieces[i].lo, pieces[i].hi);
      w.value = pieces[i].slope;
      w.detail = "slope exceeds 1/b = " + bound.str();
      return Certificate::fail(std::move(w), i + 1);
    }
  }
  return Certificate::pass(pieces.size());
}

MergedFn phi_m(int m, const Rational& b) {
  if (m < 1) throw std::domain_error("phi_m needs m >= 1");
  require_half_open(b);
  const PeriodicPWL phi = gmi(b);
  MergedFn out = MergedFn::leaf(phi, b);
  for (int i = 2; i <= m; ++i) out = seq_merge(phi, b, out);
  return out;
}

MergedFn pi_n_k(int n, int k, const Rational& b) {
  if (n < 2) throw std::domain_error("pi_n_k needs n >= 2");
  if (k < 2) throw std::domain_error("pi_n_k needs k >= 2");
  require_half_open(b);
  return seq_merge(pi_k_reflected(k, b), b, phi_m(n - 1, b));
}

std::vector<RegionGradient> region_gradients(int n, int k, const Rational& b) {
  if (n < 2) throw std::domain_error("region gradients need n >= 2");
  require_half_open(b);
  const PeriodicPWL f = pi_k_reflected(k, b);
  std::vector<RegionGradient> out;
  for (const Piece& p : f.pieces()) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const RegionGradient& r) { return r.slope == p.slope; });
    if (seen) continue;
    RegionGradient r;
    r.piece = Interval(p.lo, p.hi);
    r.slope = p.slope;
    r.gradient.push_back(p.slope / n);
    for (int i = 1; i < n; ++i) r.gradient.push_back(Rational(1) / (b * n));
    out.push_back(std::move(r));
  }
  return out;
}

Certificate check_region_gradients(int n, int k, const Rational& b) {
  const std::vector<RegionGradient> regions = region_gradients(n, k, b);
  const MergedFn F = pi_n_k(n, k, b);
  std::size_t checked = 0;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    for (std::size_t j = i + 1; j < regions.size(); ++j) {
      ++checked;
      if (regions[i].gradient == regions[j].gradient) {
        Witness w;
        w.condition = "region-gradients";
        w.interval = regions[i].piece;
        w.detail = "gradients of two regions coincide";
        return Certificate::fail(std::move(w), checked);
      }
    }
  }
  for (const RegionGradient& r : regions) {
    Vec base(static_cast<std::size_t>(n), b / 2);
    base[0] = r.piece.midpoint();
    const Rational h = min(r.piece.length() / 4, b / 4);
    const Rational at_base = eval_merged(F, base);
    for (std::size_t i = 0; i < base.size(); ++i) {
      ++checked;
      Vec moved = base;
      moved[i] += h;
      const Rational difference = eval_merged(F, moved) - at_base;
      if (difference != h * r.gradient[i]) {
        return Certificate::fail(
            point_witness("region-gradients", moved, difference / h,
                          "finite difference along coordinate " + std::to_string(i + 1) + " differs from the gradient"),
            checked);
      }
    }
  }
  return Certificate::pass(checked, std::to_string(regions.size()) + " distinct gradients certified");
}

NdFunction as_nd(const MergedFn& F) {
  return NdFunction{F.arity(), [F](const Vec& x) { return eval_merged(F, x); }};
}

Vec sample_point(std::size_t arity, std::uint64_t seed, std::size_t trial, long max_denominator) {
  std::mt19937_64 rng = trial_rng(seed, trial);
  return random_point(rng, arity, max_denominator);
}

Certificate check_genuinely_nd(const NdFunction& F, const SamplingOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const Vec zero(F.arity);
  if (const Rational v = F.eval(zero); !v.is_zero()) {
    return Certificate::fail(point_witness("zero-set", zero, v, "F != 0 at an integer vector"), 1);
  }
  const std::size_t integer_trials = std::max<std::size_t>(options.trials / 5, 1);
  const auto integer_point = [&](std::size_t i) {
    std::mt19937_64 rng = trial_rng(options.seed, i);
    std::uniform_int_distribution<long> whole(-3, 3);
    Vec x(F.arity);
    for (Rational& c : x) c = Rational(whole(rng));
    return x;
  };
  const auto bad_integer = first_index_where(integer_trials, [&](std::size_t i) {
    return !F.eval(integer_point(i)).is_zero();
  });
  if (bad_integer) {
    const Vec x = integer_point(*bad_integer);
    return Certificate::fail(point_witness("zero-set", x, F.eval(x), "F != 0 at an integer vector"),
                             *bad_integer + 2);
  }
  const auto fractional_point = [&](std::size_t i) {
    std::mt19937_64 rng = trial_rng(options.seed ^ 0x9e3779b97f4a7c15ULL, i);
    Vec x = random_point(rng, F.arity, options.max_denominator);
    while (all_integer(x)) x = random_point(rng, F.arity, options.max_denominator);
    return x;
  };
  const auto bad = first_index_where(options.trials, [&](std::size_t i) {
    return F.eval(fractional_point(i)).sign() <= 0;
  });
  const std::size_t checked = 1 + integer_trials + options.trials;
  if (bad) {
    const Vec x = fractional_point(*bad);
    return Certificate::fail(point_witness("zero-set", x, F.eval(x), "F <= 0 at a non-integer vector"), checked);
  }
  return Certificate::pass(checked, "consistent with a genuinely n-dimensional function (sampled, not proved)");
}

Certificate sample_subadditivity_nd(const NdFunction& F, const SamplingOptions& options) {
  if (options.trials < 1) throw std::invalid_argument("trials must be >= 1");
  const auto pair_at = [&](std::size_t i) {
    std::mt19937_64 rng = trial_rng(options.seed, i);
    Vec x = random_point(rng, F.arity, options.max_denominator);
    Vec y = random_point(rng, F.arity, options.max_denominator);
    return std::make_pair(std::move(x), std::move(y));
  };
  const auto gap = [&](const Vec& x, const Vec& y) {
    Vec s(x.size());
    for (std::size_t c = 0; c < x.size(); ++c) s[c] = x[c] + y[c];
    return F.eval(x) + F.eval(y) - F.eval(s);
  };
  const auto bad = first_index_where(options.trials, [&](std::size_t i) {
    const auto [x, y] = pair_at(i);
    return gap(x, y).sign() < 0;
  });
  if (bad) {
    const auto [x, y] = pair_at(*bad);
    Vec both = x;
    both.insert(both.end(), y.begin(), y.end());
    return Certificate::fail(
        point_witness("subadditivity", both, gap(x, y), "x then y; F(x) + F(y) - F(x + y) < 0"), *bad + 1);
  }
  return Certificate::pass(options.trials, "no violation among sampled pairs (falsification only)");
}

}  // namespace groupcut
