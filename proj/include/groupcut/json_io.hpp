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

// JSON interchange. Rationals are "p/q" strings in lowest terms ("p" for
// integers). Parsers throw std::invalid_argument with a message naming the
// offending field.

#include <string>

#include <json.hpp>

#include "groupcut/certificate.hpp"
#include "groupcut/constructions.hpp"
#include "groupcut/extremality.hpp"
#include "groupcut/pwl.hpp"
#include "groupcut/seqmerge.hpp"

namespace groupcut {

using Json = nlohmann::ordered_json;

Json serialize(const Rational& r);
Json serialize(const Interval& i);
// {"breakpoints": [...], "values": [...]}
Json serialize(const PeriodicPWL& f);
// {"k": k, "b": b, "intervals": [[lo, hi] x 6]}
Json serialize(const IntervalSystem& s);
Json serialize(const Witness& w);
// {"verdict": ..., "witness": {...} | null, "checked": n[, "note": ...]}
Json serialize(const Certificate& c);
Json serialize(const PerturbationTestResult& r);
// {"kind": "merge", "b1": ..., "outer": {...}, "inner": {...}} or
// {"kind": "leaf", "b": ..., "fn": {...}}
Json serialize(const MergedFn& F);

Rational parse_rational(const Json& j);
// Rejects non-increasing breakpoints, breakpoints outside [0, 1), a missing
// 0 and length mismatches. Unknown keys are ignored.
PeriodicPWL parse_pwl(const Json& j);
MergedFn parse_merged(const Json& j);

// Two-space indentation plus a trailing newline; byte-stable.
std::string dump(const Json& j);

// Throw std::runtime_error on I/O failure and std::invalid_argument on
// malformed JSON.
Json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace groupcut
