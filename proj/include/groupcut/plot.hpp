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

// Plot export. CSV keeps exact rationals; SVG converts to floating point
// only when mapping to pixel coordinates.

#include <cstddef>
#include <string>

#include "groupcut/pwl.hpp"

namespace groupcut {

// Header "x,value,sample_x,sample_value". Columns 1-2 hold the exact
// breakpoints and values; columns 3-4 hold `samples` evenly spaced float
// samples on [0, 1] (both ends included when samples >= 2). The shorter
// pair of columns is padded with empty cells.
std::string plot_csv(const PeriodicPWL& f, std::size_t samples);

// Graph over [0, 1] with breakpoints marked by circles.
std::string plot_svg(const PeriodicPWL& f, const std::string& title);

}  // namespace groupcut
