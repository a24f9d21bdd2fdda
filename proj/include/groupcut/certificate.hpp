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

#include <cstddef>
#include <optional>
#include <string>

#include "groupcut/pwl.hpp"
#include "groupcut/rational.hpp"

namespace groupcut {

enum class Verdict { pass, fail };

// Exact datum demonstrating a failed condition. Which of the optional
// fields are set depends on the condition: a point sets x, a pair sets x
// and y, an interval check sets interval. `value` carries the offending
// quantity (a negative delta, a symmetry sum different from 1, ...).
struct Witness {
  std::string condition;
  std::optional<Rational> x;
  std::optional<Rational> y;
  std::optional<Interval> interval;
  std::optional<Rational> value;
  std::string detail;
};

struct Certificate {
  Verdict verdict = Verdict::pass;
  std::optional<Witness> witness;  // present iff verdict == fail
  std::size_t checked = 0;         // number of exact conditions evaluated
  std::string note;

  bool passed() const { return verdict == Verdict::pass; }

  static Certificate pass(std::size_t checked, std::string note = {});
  static Certificate fail(Witness witness, std::size_t checked, std::string note = {});
};

const char* to_string(Verdict v);

}  // namespace groupcut
