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

// Exact incremental Gaussian elimination over the rationals.

#include <cstddef>
#include <vector>

#include "groupcut/rational.hpp"

namespace groupcut {

class RowEchelon {
 public:
  explicit RowEchelon(std::size_t columns) : columns_(columns) {}

  // Reduces `row` against the current basis and keeps it if it is
  // independent. Returns true when the rank grew.
  bool add_row(std::vector<Rational> row);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t nullity() const { return columns_ - rows_.size(); }

  // Basis of {x : A x = 0}, one vector per free column.
  std::vector<std::vector<Rational>> nullspace() const;

 private:
  std::size_t columns_;
  // Kept rows, each normalized to 1 at its pivot and zero at every other
  // pivot column (reduced row echelon form, unordered).
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace groupcut
