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

#include "groupcut/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace groupcut {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::vector<Rational> rational_list(const Json& j, const char* key) {
  const Json& list = field(j, key);
  if (!list.is_array()) throw std::invalid_argument(std::string("field \"") + key + "\" must be an array");
  std::vector<Rational> out;
  out.reserve(list.size());
  for (const Json& item : list) out.push_back(parse_rational(item));
  return out;
}

}  // namespace

Json serialize(const Rational& r) { return r.str(); }

Json serialize(const Interval& i) { return Json::array({i.lo.str(), i.hi.str()}); }

Json serialize(const PeriodicPWL& f) {
  Json bps = Json::array();
  Json vals = Json::array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    bps.push_back(f.breakpoints()[i].str());
    vals.push_back(f.values()[i].str());
  }
  Json j;
  j["breakpoints"] = std::move(bps);
  j["values"] = std::move(vals);
  return j;
}

Json serialize(const IntervalSystem& s) {
  Json j;
  j["k"] = s.k;
  j["b"] = s.b.str();
  Json intervals = Json::array();
  for (const Interval& i : s.intervals) intervals.push_back(serialize(i));
  j["intervals"] = std::move(intervals);
  return j;
}

Json serialize(const Witness& w) {
  Json j;
  j["condition"] = w.condition;
  if (w.x) j["x"] = w.x->str();
  if (w.y) j["y"] = w.y->str();
  if (w.interval) j["interval"] = serialize(*w.interval);
  if (w.value) j["value"] = w.value->str();
  if (!w.detail.empty()) j["detail"] = w.detail;
  return j;
}

Json serialize(const Certificate& c) {
  Json j;
  j["verdict"] = to_string(c.verdict);
  j["witness"] = c.witness ? serialize(*c.witness) : Json(nullptr);
  j["checked"] = c.checked;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json serialize(const PerturbationTestResult& r) {
  Json j;
  j["verdict"] = to_string(r.verdict);
  j["dimension"] = r.dimension;
  Json basis = Json::array();
  for (const PeriodicPWL& f : r.basis_functions) basis.push_back(serialize(f));
  j["basis_functions"] = std::move(basis);
  j["grid_points"] = r.grid_points;
  j["slope_classes"] = r.slope_classes;
  j["constraint_rows"] = r.constraint_rows;
  j["scope"] = r.scope;
  return j;
}

Json serialize(const MergedFn& F) {
  Json j;
  if (F.kind() == MergedFn::Kind::leaf) {
    j["kind"] = "leaf";
    j["b"] = F.b().str();
    j["fn"] = serialize(F.fn());
  } else {
    j["kind"] = "merge";
    j["b1"] = F.b().str();
    j["outer"] = serialize(F.fn());
    j["inner"] = serialize(F.inner());
  }
  return j;
}

Rational parse_rational(const Json& j) {
  if (!j.is_string()) throw std::invalid_argument("rationals must be \"p/q\" strings, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

PeriodicPWL parse_pwl(const Json& j) {
  return PeriodicPWL::from_lists(rational_list(j, "breakpoints"), rational_list(j, "values"));
}

MergedFn parse_merged(const Json& j) {
  const Json& kind = field(j, "kind");
  if (kind == "leaf") return MergedFn::leaf(parse_pwl(field(j, "fn")), parse_rational(field(j, "b")));
  if (kind == "merge") {
    return MergedFn::merge_unchecked(parse_pwl(field(j, "outer")), parse_rational(field(j, "b1")),
                                     parse_merged(field(j, "inner")));
  }
  throw std::invalid_argument("unknown merged-function kind " + kind.dump());
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return Json::parse(text.str());
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace groupcut
