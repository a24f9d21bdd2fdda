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

#include "groupcut/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupcut {

bool RowEchelon::add_row(std::vector<Rational> row) {
  if (row.size() != columns_) throw std::invalid_argument("row length does not match the column count");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Rational factor = row[pivots_[i]];
    if (factor.is_zero()) continue;
    const auto& basis = rows_[i];
    for (std::size_t c = 0; c < columns_; ++c) {
      if (!basis[c].is_zero()) row[c] -= factor * basis[c];
    }
  }
  const auto lead = std::find_if(row.begin(), row.end(), [](const Rational& r) { return !r.is_zero(); });
  if (lead == row.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - row.begin());
  const Rational scale = row[pivot];
  for (Rational& r : row) {
    if (!r.is_zero()) r /= scale;
  }
  for (auto& existing : rows_) {
    const Rational factor = existing[pivot];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < columns_; ++c) {
      if (!row[c].is_zero()) existing[c] -= factor * row[c];
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::vector<std::vector<Rational>> RowEchelon::nullspace() const {
  std::vector<bool> is_pivot(columns_, false);
  for (std::size_t p : pivots_) is_pivot[p] = true;
  std::vector<std::vector<Rational>> out;
  for (std::size_t free = 0; free < columns_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(columns_);
    x[free] = 1;
    for (std::size_t i = 0; i < rows_.size(); ++i) x[pivots_[i]] = -rows_[i][free];
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace groupcut
