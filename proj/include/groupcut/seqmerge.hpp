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

// Lifting-space and group-space representations and the sequential merge
// f <> g of a one-dimensional minimal function f with an (n-1)-dimensional
// merged function g. Merged functions are evaluation trees only; they are
// never expanded into polyhedral complexes.

#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "groupcut/certificate.hpp"
#include "groupcut/pwl.hpp"
#include "groupcut/rational.hpp"

namespace groupcut {

using Vec = std::vector<Rational>;

// A pseudo-periodic function on Q^n in lifting space.
using PsiHandle = std::function<Rational(const Vec&)>;

// [f]_b(x) = x - b f(x).
Rational lift_eval(const PeriodicPWL& f, const Rational& b, const Rational& x);

// [psi]^{-1}_b(x) = (sum x - psi(x)) / sum b. Throws std::domain_error if
// sum b = 0 and std::invalid_argument on a length mismatch.
Rational group_space_eval(const PsiHandle& psi, const Vec& b_vector, const Vec& x);

class MergedFn {
 public:
  enum class Kind { leaf, merge };

  static MergedFn leaf(PeriodicPWL fn, Rational b);
  // No minimality checks; seq_merge is the checked entry point.
  static MergedFn merge_unchecked(PeriodicPWL outer, Rational b1, MergedFn inner);

  Kind kind() const { return node_->kind; }
  // The leaf function, or the outer function of a merge node.
  const PeriodicPWL& fn() const { return node_->fn; }
  // The leaf parameter b, or b1 of a merge node.
  const Rational& b() const { return node_->b; }
  // Throws std::logic_error on a leaf.
  const MergedFn& inner() const;

  std::size_t arity() const;
  Vec b_vector() const;

 private:
  struct Node {
    Kind kind;
    PeriodicPWL fn;
    Rational b;
    std::shared_ptr<const MergedFn> inner;
  };
  explicit MergedFn(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Throws std::invalid_argument if f is not minimal for b1 or some
// one-dimensional ingredient of g is not minimal for its parameter.
MergedFn seq_merge(const PeriodicPWL& f, const Rational& b1, const MergedFn& g);

// Recursive closed form
//   F(x) = (B g(x') + b1 f(x1 + sum x' - B g(x'))) / (b1 + B),
// with x' = (x2, ..., xn) and B the sum of g's b vector. For a constant b
// vector this is ((n-1) g(x') + f(sum x - (n-1) b g(x'))) / n.
// Throws std::invalid_argument on a dimension mismatch.
Rational eval_merged(const MergedFn& F, const Vec& x);

// psi(x1, x') = [f]_{b1}(x1 + [g]_B(x')), built from nested lifts. The inner
// lift is computed through eval_definitional of g.
PsiHandle lifted(const MergedFn& F);

// group_space_eval(lifted(F), b_vector(F), x).
Rational eval_definitional(const MergedFn& F, const Vec& x);

// Every slope of f is at most 1/b, i.e. x - b f(x) is nondecreasing.
Certificate check_lift_nondecreasing(const PeriodicPWL& f, const Rational& b);

// m-fold merge of gmi(b). Throws std::domain_error unless m >= 1 and
// 1/2 <= b < 1.
MergedFn phi_m(int m, const Rational& b);

// pi_k_reflected(k, b) <> phi_m(n - 1, b). Throws std::domain_error unless
// n >= 2, k >= 2 and 1/2 <= b < 1.
MergedFn pi_n_k(int n, int k, const Rational& b);

struct RegionGradient {
  Interval piece;  // J: first maximal piece of the reflected pi_k with this slope
  Rational slope;  // sigma
  Vec gradient;    // (sigma / n, 1 / (b n), ..., 1 / (b n))
};

// One region J x (0, b)^(n-1) per slope of pi_k_reflected(k, b).
std::vector<RegionGradient> region_gradients(int n, int k, const Rational& b);

// Pairwise distinct gradients, and exact finite differences of eval_merged
// at the point (mid J, b/2, ..., b/2) with step min(|J|/4, b/4) matching
// each gradient coordinate.
Certificate check_region_gradients(int n, int k, const Rational& b);

// An arbitrary function on Q^n, used by the sampling harnesses.
struct NdFunction {
  std::size_t arity = 0;
  std::function<Rational(const Vec&)> eval;
};

NdFunction as_nd(const MergedFn& F);

struct SamplingOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  long max_denominator = 64;
};

// F = 0 at sampled integer vectors (the zero vector first) and F > 0 at
// `trials` sampled non-integer rational vectors. Passing is consistent
// with a genuinely n-dimensional function; sampling proves nothing.
Certificate check_genuinely_nd(const NdFunction& F, const SamplingOptions& options);

// F(x) + F(y) - F(x + y) >= 0 at `trials` sampled pairs. A falsification
// harness only.
Certificate sample_subadditivity_nd(const NdFunction& F, const SamplingOptions& options);

// Deterministic random rational vector for trial i: each coordinate is an
// integer or p / q with q <= max_denominator, in [-1, 2).
Vec sample_point(std::size_t arity, std::uint64_t seed, std::size_t trial, long max_denominator);

}  // namespace groupcut
