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

#include "groupcut/certificate.hpp"

#include <utility>

namespace groupcut {

Certificate Certificate::pass(std::size_t checked, std::string note) {
  Certificate c;
  c.verdict = Verdict::pass;
  c.checked = checked;
  c.note = std::move(note);
  return c;
}

Certificate Certificate::fail(Witness witness, std::size_t checked, std::string note) {
  Certificate c;
  c.verdict = Verdict::fail;
  c.witness = std::move(witness);
  c.checked = checked;
  c.note = std::move(note);
  return c;
}

const char* to_string(Verdict v) { return v == Verdict::pass ? "pass" : "fail"; }

}  // namespace groupcut
