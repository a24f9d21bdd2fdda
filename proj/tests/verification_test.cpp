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

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "groupcut/constructions.hpp"
#include "oracle.hpp"

using groupcut::Certificate;
using groupcut::PeriodicPWL;
using groupcut::Rational;

namespace {

PeriodicPWL bumped(const PeriodicPWL& f, const Rational& at, const Rational& by) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const Rational& x = f.breakpoints()[i];
    pts.emplace_back(x, f.values()[i] + (x == at ? by : Rational(0)));
  }
  return PeriodicPWL::from_points(pts);
}

void expect_delta_witness(const PeriodicPWL& f, const Certificate& c) {
  ASSERT_FALSE(c.passed());
  ASSERT_TRUE(c.witness && c.witness->x && c.witness->y);
  EXPECT_LT(oracle::delta(f, *c.witness->x, *c.witness->y), Rational(0));
  EXPECT_EQ(*c.witness->value, oracle::delta(f, *c.witness->x, *c.witness->y));
}

}  // namespace

TEST(Subadditive, KnownFunctions) {
  EXPECT_TRUE(groupcut::check_subadditive(groupcut::gmi(Rational(1, 2))).passed());
  EXPECT_TRUE(groupcut::check_subadditive(groupcut::pi_k(5, Rational(1, 2))).passed());
}

TEST(Subadditive, MutantFailsWithWitness) {
  const PeriodicPWL f = bumped(groupcut::pi_k(3, Rational(1, 2)), Rational(1, 16), Rational(1, 100));
  expect_delta_witness(f, groupcut::check_subadditive(f));
  expect_delta_witness(f, groupcut::brute_force_subadditive(f, 3200));
}

TEST(Subadditive, VerticesCoverTheThreeFamilies) {
  const PeriodicPWL f = groupcut::gmi(Rational(1, 3));
  const auto v = groupcut::subadditivity_vertices(f);
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  for (const auto& p : std::vector<groupcut::Point2>{{Rational(0), Rational(1, 3)},
                                                      {Rational(1, 3), Rational(2, 3)},
                                                      {Rational(2, 3), Rational(1, 3)}}) {
    EXPECT_TRUE(std::binary_search(v.begin(), v.end(), p));
  }
}

TEST(Subadditive, AgreesWithGridOracleOnRandomFunctions) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<long> den_dist(2, 32);
  int failures = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const long den = den_dist(rng);
    const PeriodicPWL f = trial % 2 == 0 ? oracle::random_pwl(rng, den, 4) : oracle::random_subadditive(rng, den);
    const long cap = 2 * den * den;
    const Certificate exact = groupcut::check_subadditive(f);
    const Certificate grid = groupcut::brute_force_subadditive(f, cap);
    // Every vertex has denominator dividing den, so the grid contains them all.
    ASSERT_EQ(exact.passed(), grid.passed()) << "trial " << trial;
    if (!exact.passed()) {
      ++failures;
      expect_delta_witness(f, exact);
      const auto naive = oracle::grid_violation(f, cap);
      ASSERT_TRUE(naive.has_value());
      EXPECT_EQ(*grid.witness->x, Rational(naive->first, cap));
      EXPECT_EQ(*grid.witness->y, Rational(naive->second, cap));
    }
  }
  EXPECT_GT(failures, 20);
  EXPECT_LT(failures, 200);
}

TEST(Subadditive, WitnessIndependentOfWorkerCount) {
  const PeriodicPWL f = bumped(groupcut::pi_k(5, Rational(1, 2)), Rational(1, 1024), Rational(1, 1000));
  setenv("GROUPCUT_THREADS", "1", 1);
  const Certificate one = groupcut::check_subadditive(f);
  const Certificate one_grid = groupcut::brute_force_subadditive(f, 4096);
  setenv("GROUPCUT_THREADS", "7", 1);
  const Certificate seven = groupcut::check_subadditive(f);
  const Certificate seven_grid = groupcut::brute_force_subadditive(f, 4096);
  unsetenv("GROUPCUT_THREADS");
  ASSERT_FALSE(one.passed());
  EXPECT_EQ(*one.witness->x, *seven.witness->x);
  EXPECT_EQ(*one.witness->y, *seven.witness->y);
  ASSERT_FALSE(one_grid.passed());
  EXPECT_EQ(*one_grid.witness->x, *seven_grid.witness->x);
  EXPECT_EQ(*one_grid.witness->y, *seven_grid.witness->y);
}

TEST(BruteForce, PassesAndRejectsTinyCap) {
  EXPECT_TRUE(groupcut::brute_force_subadditive(groupcut::gmi(Rational(1, 2)), 64).passed());
  EXPECT_TRUE(groupcut::brute_force_subadditive(groupcut::pi_k(4, Rational(1, 2)), 512).passed());
  EXPECT_THROW(groupcut::brute_force_subadditive(groupcut::gmi(Rational(1, 2)), 1), std::invalid_argument);
}

TEST(Symmetry, Examples) {
  EXPECT_TRUE(groupcut::check_symmetry(groupcut::gmi(Rational(1, 2)), Rational(1, 2)).passed());
  EXPECT_TRUE(groupcut::check_symmetry(groupcut::pi_k(4, Rational(1, 3)), Rational(1, 3)).passed());
  const PeriodicPWL f = groupcut::gmi(Rational(1, 2));
  const Certificate c = groupcut::check_symmetry(f, Rational(1, 3));
  ASSERT_FALSE(c.passed());
  EXPECT_EQ(*c.witness->x, Rational(0));
  EXPECT_EQ(*c.witness->value, Rational(2, 3));
  EXPECT_NE(f(*c.witness->x) + f(Rational(1, 3) - *c.witness->x), Rational(1));
}

TEST(Minimal, KnownFunctions) {
  for (const Rational& b : {Rational(1, 3), Rational(2, 5), Rational(1, 2)}) {
    EXPECT_TRUE(groupcut::check_minimal(groupcut::gmi(b), b).passed());
    for (int k = 2; k <= 8; ++k) {
      const PeriodicPWL f = groupcut::pi_k(k, b);
      EXPECT_TRUE(groupcut::check_minimal(f, b).passed()) << k << " " << b;
      EXPECT_TRUE(groupcut::check_minimal(groupcut::reflect(f), Rational(1) - b).passed());
    }
  }
}

TEST(Minimal, ReportsFirstFailureInOrder) {
  const Certificate one = groupcut::check_minimal(PeriodicPWL::constant(Rational(1)), Rational(1, 2));
  ASSERT_FALSE(one.passed());
  EXPECT_EQ(one.witness->condition, "zero-at-integers");
  const PeriodicPWL negative = PeriodicPWL::from_points({{Rational(0), Rational(0)}, {Rational(1, 2), Rational(-1)}});
  EXPECT_EQ(groupcut::check_minimal(negative, Rational(1, 2)).witness->condition, "nonnegativity");
  const PeriodicPWL mutant = bumped(groupcut::pi_k(3, Rational(1, 2)), Rational(1, 16), Rational(1, 100));
  EXPECT_EQ(groupcut::check_minimal(mutant, Rational(1, 2)).witness->condition, "subadditivity");
  EXPECT_EQ(groupcut::check_minimal(groupcut::gmi(Rational(1, 3)), Rational(1, 2)).witness->condition, "symmetry");
}

TEST(ZeroSet, Examples) {
  EXPECT_TRUE(groupcut::check_zero_set(groupcut::pi_k(6, Rational(1, 2))).passed());
  EXPECT_TRUE(groupcut::check_zero_set(groupcut::gmi(Rational(1, 3))).passed());
  const Certificate zero = groupcut::check_zero_set(PeriodicPWL());
  ASSERT_FALSE(zero.passed());
  EXPECT_FALSE(zero.witness->x->is_integer());
  EXPECT_EQ(*zero.witness->value, Rational(0));
  const PeriodicPWL touching = PeriodicPWL::from_points(
      {{Rational(0), Rational(0)}, {Rational(1, 4), Rational(1)}, {Rational(1, 2), Rational(0)}, {Rational(3, 4), Rational(1)}});
  EXPECT_EQ(*groupcut::check_zero_set(touching).witness->x, Rational(1, 2));
}

TEST(SlopeCensus, Examples) {
  EXPECT_TRUE(groupcut::check_slope_census(groupcut::pi_k(4, Rational(1, 2)), 4, Rational(1, 2)).passed());
  EXPECT_EQ(groupcut::slopes(groupcut::pi_k(4, Rational(1, 2))),
            (std::set<Rational>{Rational(2), Rational(6), Rational(14), Rational(-2)}));
  EXPECT_TRUE(groupcut::check_slope_census(groupcut::gmi(Rational(1, 2)), 2, Rational(1, 2)).passed());
  EXPECT_FALSE(groupcut::check_slope_census(groupcut::pi_k(4, Rational(1, 2)), 5, Rational(1, 2)).passed());
  EXPECT_THROW(groupcut::check_slope_census(groupcut::gmi(Rational(1, 2)), 1, Rational(1, 2)), std::domain_error);
}
