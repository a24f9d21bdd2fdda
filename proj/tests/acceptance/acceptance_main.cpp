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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. All comparisons are exact rational comparisons; the only
// tolerances are the wall-clock limits listed with each criterion.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "groupcut/constructions.hpp"
#include "groupcut/extremality.hpp"
#include "groupcut/plot.hpp"
#include "groupcut/seqmerge.hpp"
#include "groupcut/verification.hpp"
#include "oracle.hpp"

using namespace groupcut;

namespace {

// Each criterion returns an empty string on success, else a reason.
struct Criterion {
  int id;
  std::string name;
  double seconds;  // wall-clock limit
  std::function<std::string(std::ostringstream&)> body;
};

const std::vector<Rational> kCensusB{Rational(1, 3), Rational(2, 5), Rational(1, 2)};

std::string str(const Rational& r) { return r.str(); }

PeriodicPWL bumped(const PeriodicPWL& f, std::size_t index, const Rational& by) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (std::size_t i = 0; i < f.size(); ++i) {
    pts.emplace_back(f.breakpoints()[i], f.values()[i] + (i == index ? by : Rational(0)));
  }
  return PeriodicPWL::from_points(pts);
}

// True iff re-evaluating the witness reproduces the reported violation.
bool witness_reproduces(const PeriodicPWL& f, const Rational& b, const Witness& w) {
  if (w.condition == "zero-at-integers") return w.x && !f(*w.x).is_zero() && w.x->is_integer();
  if (w.condition == "nonnegativity") return w.x && f(*w.x).sign() < 0;
  if (w.condition == "subadditivity") return w.x && w.y && oracle::delta(f, *w.x, *w.y).sign() < 0;
  if (w.condition == "symmetry") return w.x && f(*w.x) + f(b - *w.x) != Rational(1);
  return false;
}

std::string census(std::ostringstream& log) {
  std::size_t cases = 0;
  for (const Rational& b : kCensusB) {
    for (int k = 2; k <= 10; ++k) {
      const PeriodicPWL f = pi_k(k, b);
      std::set<Rational> expected{Rational(-1) / (Rational(1) - b)};
      for (int i = 2; i <= k; ++i) expected.insert((oracle::power(Rational(2), i - 2) - b) / (b - b * b));
      const std::set<Rational> got = slopes(f);
      if (got.size() != static_cast<std::size_t>(k) || got != expected) {
        return "slope set mismatch at k=" + std::to_string(k) + " b=" + str(b);
      }
      const Certificate c = check_slope_census(f, k, b);
      if (!c.passed()) return "check_slope_census failed at k=" + std::to_string(k) + " b=" + str(b);
      ++cases;
    }
  }
  log << cases << " (k, b) pairs";
  return {};
}

std::string minimality(std::ostringstream& log) {
  std::size_t max_breakpoints = 0;
  std::size_t checked = 0;
  for (const Rational& b : kCensusB) {
    for (int k = 2; k <= 10; ++k) {
      const PeriodicPWL f = pi_k(k, b);
      max_breakpoints = std::max(max_breakpoints, f.size());
      const Certificate c = check_minimal(f, b);
      if (!c.passed()) return "check_minimal failed at k=" + std::to_string(k) + " b=" + str(b);
      checked += c.checked;
    }
  }
  if (max_breakpoints >= 200) return "|B| = " + std::to_string(max_breakpoints) + " is not below 200";
  log << "27 functions, max |B| = " << max_breakpoints << ", " << checked << " exact conditions";
  return {};
}

std::string mutation(std::ostringstream& log) {
  std::size_t mutants = 0;
  std::size_t grid_failures = 0;
  for (const Rational& b : {Rational(1, 2), Rational(1, 3)}) {
    for (int k = 3; k <= 5; ++k) {
      const PeriodicPWL f = pi_k(k, b);
      for (std::size_t i = 0; i < f.size(); ++i) {
        for (const Rational& eps : {Rational(1, 1000), Rational(-1, 1000)}) {
          const PeriodicPWL g = bumped(f, i, eps);
          ++mutants;
          const std::string where =
              "k=" + std::to_string(k) + " b=" + str(b) + " x=" + str(f.breakpoints()[i]) + " eps=" + str(eps);
          const Certificate c = check_minimal(g, b);
          if (c.passed()) return "mutant passed check_minimal: " + where;
          if (!witness_reproduces(g, b, *c.witness)) return "witness does not reproduce: " + where;
          const long cap = 4 * denominator_lcm(g.breakpoints()).get_si();
          const Certificate grid = brute_force_subadditive(g, cap);
          if (!grid.passed()) {
            ++grid_failures;
            const Certificate exact = check_subadditive(g);
            if (exact.passed()) return "brute force fails but the exact check passes: " + where;
            if (oracle::delta(g, *grid.witness->x, *grid.witness->y).sign() >= 0) {
              return "brute-force witness does not reproduce: " + where;
            }
          }
        }
      }
    }
  }
  log << mutants << " mutants rejected with reproducing witnesses; brute force failed on " << grid_failures
      << " of them, all confirmed by the exact check";
  return {};
}

std::string replay(std::ostringstream& log) {
  std::size_t facts = 0;
  for (const Rational& b : kCensusB) {
    for (int k = 3; k <= 8; ++k) {
      const Certificate c = replay_pi_k_facet_proof(k, b);
      if (!c.passed()) return "replay failed at k=" + std::to_string(k) + " b=" + str(b) + ": " + c.witness->detail;
      facts += c.checked;
    }
  }
  log << "18 (k, b) pairs, " << facts << " exact facts";
  return {};
}

std::string restricted(std::ostringstream& log) {
  std::size_t cases = 0;
  std::size_t largest_grid = 0;
  for (const Rational& b : {Rational(1, 3), Rational(1, 2)}) {
    std::vector<std::pair<std::string, PeriodicPWL>> fns{{"gmi", gmi(b)}};
    for (int k = 3; k <= 5; ++k) fns.emplace_back("pi_" + std::to_string(k), pi_k(k, b));
    for (const auto& [name, f] : fns) {
      const long lcm = denominator_lcm(f.breakpoints()).get_si();
      std::vector<PerturbationVerdict> verdicts;
      for (long d : {lcm, 2 * lcm}) {
        const PerturbationTestResult r = restricted_facet_test(f, b, d);
        largest_grid = std::max(largest_grid, r.grid_points);
        if (r.verdict != PerturbationVerdict::certified_unique || r.dimension != 0) {
          return name + " b=" + str(b) + " d=" + std::to_string(d) + ": " + to_string(r.verdict) + ", dimension " +
                 std::to_string(r.dimension);
        }
        verdicts.push_back(r.verdict);
        ++cases;
      }
      if (verdicts[0] != verdicts[1]) return name + " b=" + str(b) + ": verdict depends on the refinement";
    }
  }
  log << cases << " runs certified_unique, largest grid " << largest_grid << " points";
  return {};
}

std::string convergence(std::ostringstream& log) {
  const Rational b(1, 2);
  if (pi_infinity_error_bound(4, b) != Rational(7, 64)) return "bound(4, 1/2) = " + str(pi_infinity_error_bound(4, b));
  const Rational expected_bound = oracle::power(Rational(1, 2), 8) * Rational(14) / (Rational(1) - b);
  if (expected_bound != Rational(7, 64)) return "independent bound formula disagrees";
  for (int K = 3; K <= 8; ++K) {
    const PeriodicPWL f = pi_k(K, b);
    const PeriodicPWL g = pi_k(K + 4, b);
    Rational worst;
    const auto refined = common_refinement(f, g);
    for (const Rational& x : refined.first.breakpoints()) worst = max(worst, abs(f(x) - g(x)));
    const Rational bound = pi_infinity_error_bound(K, b);
    if (worst > bound) return "K=" + std::to_string(K) + ": max difference " + str(worst) + " > " + str(bound);
    log << "K=" << K << " max " << worst << " <= " << bound << (K < 8 ? "; " : "");
  }
  return {};
}

Vec random_vec(std::mt19937_64& rng, std::size_t n) {
  Vec x(n);
  for (Rational& c : x) c = oracle::random_rational(rng, 64, -2, 3);
  return x;
}

std::string merge_consistency(std::ostringstream& log) {
  std::mt19937_64 rng(20260101);
  std::vector<std::pair<std::string, MergedFn>> fns;
  for (int m = 1; m <= 4; ++m) fns.emplace_back("Phi_" + std::to_string(m), phi_m(m, Rational(1, 2)));
  for (int n = 2; n <= 3; ++n) {
    for (int k = 2; k <= 5; ++k) {
      fns.emplace_back("Pi^" + std::to_string(n) + "_" + std::to_string(k), pi_n_k(n, k, Rational(1, 2)));
    }
  }
  fns.emplace_back("Phi_3(b=2/3)", phi_m(3, Rational(2, 3)));
  std::size_t evaluations = 0;
  for (const auto& [name, F] : fns) {
    for (int i = 0; i < 200; ++i) {
      const Vec x = random_vec(rng, F.arity());
      if (eval_merged(F, x) != eval_definitional(F, x)) return name + ": closed and definitional paths differ";
      ++evaluations;
    }
    const PsiHandle psi = lifted(F);
    Rational total_b;
    for (const Rational& c : F.b_vector()) total_b += c;
    for (int i = 0; i < 100; ++i) {
      const Vec x = random_vec(rng, F.arity());
      Rational total;
      for (const Rational& c : x) total += c;
      if (total - total_b * group_space_eval(psi, F.b_vector(), x) != psi(x)) return name + ": round trip fails";
    }
  }
  log << fns.size() << " functions, " << evaluations << " paired evaluations, "
      << 100 * fns.size() << " round trips";
  return {};
}

std::string structure(std::ostringstream& log) {
  std::mt19937_64 rng(77);
  const Rational b(1, 2);
  for (int m = 2; m <= 4; ++m) {
    const MergedFn F = phi_m(m, b);
    for (int i = 0; i < 50; ++i) {
      Vec x(static_cast<std::size_t>(m));
      Rational total;
      for (Rational& c : x) {
        std::uniform_int_distribution<long> num(1, 127);
        c = Rational(num(rng), 256);
        total += c;
      }
      if (eval_merged(F, x) != total / (Rational(m) * b)) return "affine region fails for Phi_" + std::to_string(m);
    }
  }
  const std::vector<std::pair<std::string, MergedFn>> zero_fns{
      {"Phi_2", phi_m(2, b)}, {"Phi_3", phi_m(3, b)}, {"Pi^2_3", pi_n_k(2, 3, b)}, {"Pi^3_4", pi_n_k(3, 4, b)}};
  for (const auto& [name, F] : zero_fns) {
    for (int i = 0; i < 20; ++i) {
      Vec z(F.arity());
      std::uniform_int_distribution<long> whole(-5, 5);
      for (Rational& c : z) c = Rational(whole(rng));
      if (!eval_merged(F, z).is_zero()) return name + " nonzero at an integer vector";
    }
    const Certificate c = check_genuinely_nd(as_nd(F), SamplingOptions{100, 2026, 64});
    if (!c.passed()) return name + " zero-set sampling failed";
  }
  for (const Rational& bb : {Rational(1, 2), Rational(3, 5), Rational(2, 3)}) {
    for (int k = 2; k <= 8; ++k) {
      if (!check_lift_nondecreasing(pi_k_reflected(k, bb), bb).passed()) {
        return "lift not nondecreasing for reflected pi_" + std::to_string(k) + " b=" + str(bb);
      }
    }
  }
  for (const auto& [n, k] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}}) {
    const Certificate c = check_region_gradients(n, k, b);
    if (!c.passed()) return "gradient check failed for (n, k) = (" + std::to_string(n) + ", " + std::to_string(k) + ")";
    if (region_gradients(n, k, b).size() != static_cast<std::size_t>(k)) return "expected k regions";
  }
  log << "affine region 150 points, zero set on 4 functions, lift monotone for 21 reflected functions, gradients for "
         "(2,3) and (3,4)";
  return {};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      cells.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::string plot_export(std::ostringstream& log) {
  const Rational b(1, 2);
  for (int k = 2; k <= 4; ++k) {
    const PeriodicPWL f = pi_k(k, b);
    const auto rows = parse_csv(plot_csv(f, 201));
    std::size_t exact_rows = 0;
    for (std::size_t r = 1; r < rows.size() && !rows[r][0].empty(); ++r) {
      if (Rational::parse(rows[r][0]) != f.breakpoints()[r - 1] || Rational::parse(rows[r][1]) != f.values()[r - 1]) {
        return "CSV row " + std::to_string(r) + " of pi_" + std::to_string(k) + " differs from the constructor";
      }
      ++exact_rows;
    }
    if (exact_rows != f.size()) return "CSV of pi_" + std::to_string(k) + " has the wrong number of breakpoints";

    // Shape: global peak 1 at b; for k >= 3 a local maximum at b (1/8)^(k-2).
    Rational peak_x = f.breakpoints()[0];
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.values()[i] > f(peak_x)) peak_x = f.breakpoints()[i];
    }
    if (peak_x != b || f(b) != Rational(1)) return "pi_" + std::to_string(k) + " does not peak at (b, 1)";
    if (k >= 3) {
      const Rational a = b * oracle::power(Rational(1, 8), k - 2);
      const Rational h = a / 4;
      if (!(f(a) > f(a - h) && f(a) > f(a + h))) return "no local maximum at b (1/8)^(k-2) for k=" + std::to_string(k);
    }
    const std::string svg = plot_svg(f, "pi_" + std::to_string(k) + ", b = 1/2");
    if (svg.find("<polyline") == std::string::npos) return "SVG lacks the graph";
    std::ofstream("pi_" + std::to_string(k) + ".svg") << svg;
  }
  const PerturbationTestResult r = restricted_facet_test(pi_k(3, b), b, 16);
  if (r.scope.find("not a proof") == std::string::npos) return "restricted test does not state its scope";
  const Certificate c = replay_pi_k_facet_proof(3, b);
  if (c.note.find("not machine-checked") == std::string::npos) return "replay certificate does not state its scope";
  log << "CSV exact for pi_2..pi_4, shapes confirmed, SVGs written to pi_{2,3,4}.svg";
  return {};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "k-slope census", 1.0, census},
      {2, "minimality", 10.0, minimality},
      {3, "mutation sensitivity", 30.0, mutation},
      {4, "facet replay", 5.0, replay},
      {5, "PWL-restricted extremality", 60.0, restricted},
      {6, "uniform convergence bound", 1.0, convergence},
      {7, "sequential merge consistency", 10.0, merge_consistency},
      {8, "n-dimensional structure", 10.0, structure},
      {9, "plot export", 60.0, plot_export},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    std::ostringstream log;
    std::string reason;
    const auto start = std::chrono::steady_clock::now();
    try {
      reason = c.body(log);
    } catch (const std::exception& e) {
      reason = std::string("exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (reason.empty() && elapsed > c.seconds) {
      reason = "took " + std::to_string(elapsed) + " s, limit " + std::to_string(c.seconds) + " s";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", elapsed);
    if (reason.empty()) {
      std::cout << "[PASS] " << c.id << ". " << c.name << " (" << timing << "): " << log.str() << "\n";
    } else {
      ++failed;
      std::cout << "[FAIL] " << c.id << ". " << c.name << " (" << timing << "): " << reason << "\n";
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
