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

// Equality structure E(f) of a subadditive periodic function, the Interval
// Lemma as a constraint generator, a facet test restricted to continuous
// piecewise-linear perturbations, and an exact replay of the numeric facts
// behind the facet argument for pi_k.

#include <string>
#include <vector>

#include "groupcut/certificate.hpp"
#include "groupcut/pwl.hpp"
#include "groupcut/rational.hpp"
#include "groupcut/verification.hpp"

namespace groupcut {

// A two-dimensional cell of the subadditivity complex on which delta
// vanishes identically. Coordinates lie in [0, 1]^2; the sum projection
// lies in [0, 2] and is read modulo 1.
struct AdditiveFace {
  std::vector<Point2> vertices;  // convex polygon, counterclockwise
  Interval x_projection;
  Interval y_projection;
  Interval sum_projection;
};

struct EqualityStructure {
  PeriodicPWL function;
  std::vector<Point2> additive_vertices;     // lexicographic order
  std::vector<AdditiveFace> additive_faces;  // cells of the complex, unmerged
};

// Throws std::invalid_argument if f is not subadditive.
EqualityStructure equality_structure(const PeriodicPWL& f);

// True iff delta(f, x, y) = 0 for every (x, y) in U x V. Decided exactly
// from the vertices of the complex clipped to the rectangle.
bool rectangle_additive(const PeriodicPWL& f, const Interval& u, const Interval& v);

// Every admissible theta is affine over u, v and sum with one common slope.
struct AffinityConstraint {
  Interval u;
  Interval v;
  Interval sum;
};

// Interval Lemma as a constraint generator. Throws std::invalid_argument if
// U or V is degenerate or U x V is not contained in E(f).
AffinityConstraint interval_lemma_apply(const EqualityStructure& structure, const Interval& u, const Interval& v);

// True iff g is additive wherever f is: at every additive vertex and every
// vertex of every additive face.
bool satisfies_equalities(const EqualityStructure& structure, const PeriodicPWL& g);

enum class PerturbationVerdict { certified_unique, not_unique, inconclusive };

struct PerturbationTestResult {
  PerturbationVerdict verdict = PerturbationVerdict::inconclusive;
  std::size_t dimension = 0;                 // dimension of the affine solution set
  std::vector<PeriodicPWL> basis_functions;  // directions theta - f spanning it
  std::size_t grid_points = 0;
  std::size_t slope_classes = 0;
  std::size_t constraint_rows = 0;
  std::string scope;
};

const char* to_string(PerturbationVerdict v);

// Solves for every continuous piecewise-linear theta on a grid containing
// f's breakpoints, the points p / refinement_denominator, the coordinates
// of f's additive vertices and their reflections x -> b - x, subject to
// theta(0) = 0, theta(b) = 1, theta(x) + theta(b - x) = 1, additivity at the
// additive vertices of f, and a shared slope over the three projections of
// each additive face. certified_unique means theta = f is the only
// solution inside this class. Throws std::invalid_argument if f is not
// minimal for b or refinement_denominator < 1.
PerturbationTestResult restricted_facet_test(const PeriodicPWL& f, const Rational& b, long refinement_denominator);

// Replays, for f (default pi_k(k, b)), the exact facts the facet argument for
// pi_k rests on, in five groups:
//   (a) [(1+b)/2, 1] + [(1+b)/2, 1] = I^k_6 u {1} mod 1, additive there;
//       f(0) = f(1) = 0 and f(b) = 1
//   (b) U = [b/4, 3b/8] and U + U inside I^3_3, U x U additive,
//       f(b/4) = 1/4, f(b/2) = 1/2, f(3b/4) = 3/4
//   (c) for j = 3..k, U = [3a/2, 2a], V = [1 - a/2, 1] with a = b(1/8)^(j-2):
//       U + V = I^j_2 mod 1, U x V additive, equal slopes on I^j_2 and V
//   (d) for j = 3..k-1, I* = [2a', a] with a' = a/8: U = [2a', 4a'],
//       U u (U + U) = I*, I* inside I^m_3 for m > j, U x U additive,
//       f linear with the level-j slope on I*, 4f(2a') = 2f(4a') = f(a)
//   (e) U = [0, a_k / 2], U + U = I^k_1, U x U additive
// The witness of a failure names the first failing fact.
Certificate replay_pi_k_facet_proof(int k, const Rational& b);
Certificate replay_pi_k_facet_proof(const PeriodicPWL& f, int k, const Rational& b);

// Minimal, continuous and exactly two slopes.
Certificate two_slope_shortcut(const PeriodicPWL& f, const Rational& b);

}  // namespace groupcut
