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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>

#include "groupcut/constructions.hpp"
#include "groupcut/extremality.hpp"
#include "groupcut/json_io.hpp"
#include "groupcut/plot.hpp"
#include "groupcut/seqmerge.hpp"
#include "groupcut/verification.hpp"

namespace groupcut::cli {

namespace {

// Thrown for bad parameter values found after parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational rational_flag(const std::optional<std::string>& text, const char* name) {
  if (!text) throw UsageError(std::string("--") + name + " is required");
  try {
    return Rational::parse(*text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--") + name + ": " + e.what());
  }
}

int int_flag(const std::optional<int>& value, const char* name) {
  if (!value) throw UsageError(std::string("--") + name + " is required");
  return *value;
}

std::string join(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

bool is_merged(const Json& j) { return j.is_object() && j.contains("kind"); }

PeriodicPWL read_pwl(const std::string& path) { return parse_pwl(read_json_file(path)); }

int emit_certificate(const Certificate& c, std::ostream& out) {
  out << dump(serialize(c));
  return c.passed() ? kOk : kFailed;
}

void emit_or_write(const Json& j, const std::optional<std::string>& path, std::ostream& out) {
  if (path) {
    write_text_file(*path, dump(j));
  } else {
    out << dump(j);
  }
}

struct Options {
  // construct
  std::string kind;
  std::optional<std::string> b, b1, b2;
  std::optional<int> k, m, n;
  std::optional<std::string> out_path;
  // eval
  std::string input;
  std::vector<std::string> xs;
  bool pi_inf = false;
  // verify
  std::string check;
  std::optional<long> cap;
  // certify
  std::string mode;
  long refine = 16;
  // merge
  std::string inner;
  // plot
  std::size_t samples = 101;
  std::optional<std::string> title;
};

int cmd_construct(const Options& o, std::ostream& out) {
  Json j;
  std::string summary;
  if (o.kind == "gmi") {
    const PeriodicPWL f = gmi(rational_flag(o.b, "b"));
    j = serialize(f);
    summary = "slopes: " + std::to_string(slopes(f).size()) + "\nbreakpoints: " + std::to_string(f.size()) + "\n";
  } else if (o.kind == "pi-k") {
    const int k = int_flag(o.k, "k");
    if (k < 2) throw UsageError("k must be >= 2 for pi-k, got " + std::to_string(k));
    const PeriodicPWL f = k_slope_function(k, rational_flag(o.b, "b"));
    j = serialize(f);
    summary = "slopes: " + std::to_string(slopes(f).size()) + "\nbreakpoints: " + std::to_string(f.size()) + "\n";
  } else if (o.kind == "pi-inf") {
    const PiInfinityTruncation t = pi_infinity_truncation(rational_flag(o.b, "b"), int_flag(o.k, "k"));
    j = serialize(t.fn);
    j["truncation_level"] = t.K;
    j["sup_error_bound"] = t.sup_error_bound.str();
    summary = "slopes: " + std::to_string(slopes(t.fn).size()) + "\nbreakpoints: " + std::to_string(t.fn.size()) +
              "\nsup error bound: " + t.sup_error_bound.str() + "\n";
  } else {
    const MergedFn F = o.kind == "phi-m" ? phi_m(int_flag(o.m, "m"), rational_flag(o.b, "b"))
                                         : pi_n_k(int_flag(o.n, "n"), int_flag(o.k, "k"), rational_flag(o.b, "b"));
    j = serialize(F);
    summary = "arity: " + std::to_string(F.arity()) + "\nb vector: " + join(F.b_vector()) + "\n";
  }
  emit_or_write(j, o.out_path, out);
  if (o.out_path) out << summary;
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  if (o.xs.empty()) throw UsageError("--x is required");
  Vec xs;
  for (const std::string& x : o.xs) {
    try {
      xs.push_back(Rational::parse(x));
    } catch (const std::invalid_argument& e) {
      throw UsageError(std::string("--x: ") + e.what());
    }
  }
  Json result = Json::array();
  if (o.pi_inf) {
    const Rational b = rational_flag(o.b, "b");
    for (const Rational& x : xs) result.push_back(Json{{"x", x.str()}, {"value", pi_infinity(x, b).str()}});
  } else {
    if (o.input.empty()) throw UsageError("an input file or --pi-inf is required");
    const Json j = read_json_file(o.input);
    if (is_merged(j)) {
      const MergedFn F = parse_merged(j);
      Json point = Json::array();
      for (const Rational& x : xs) point.push_back(x.str());
      result.push_back(Json{{"x", point}, {"value", eval_merged(F, xs).str()}});
    } else {
      const PeriodicPWL f = parse_pwl(j);
      for (const Rational& x : xs) result.push_back(Json{{"x", x.str()}, {"value", f(x).str()}});
    }
  }
  out << dump(result);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PeriodicPWL f = read_pwl(o.input);
  if (o.check == "minimal") return emit_certificate(check_minimal(f, rational_flag(o.b, "b")), out);
  if (o.check == "subadditive") {
    if (o.cap) return emit_certificate(brute_force_subadditive(f, *o.cap), out);
    return emit_certificate(check_subadditive(f), out);
  }
  if (o.check == "symmetry") return emit_certificate(check_symmetry(f, rational_flag(o.b, "b")), out);
  if (o.check == "slopes") {
    return emit_certificate(check_slope_census(f, int_flag(o.k, "k"), rational_flag(o.b, "b")), out);
  }
  return emit_certificate(check_zero_set(f), out);
}

int cmd_certify(const Options& o, std::ostream& out) {
  const PeriodicPWL f = read_pwl(o.input);
  const Rational b = rational_flag(o.b, "b");
  const Certificate minimal = check_minimal(f, b);
  if (!minimal.passed()) {
    Certificate c = minimal;
    c.note = "not minimal; certification skipped";
    return emit_certificate(c, out);
  }
  if (o.mode == "two-slope") return emit_certificate(two_slope_shortcut(f, b), out);
  if (o.mode == "replay") return emit_certificate(replay_pi_k_facet_proof(f, int_flag(o.k, "k"), b), out);
  if (o.refine < 1) throw UsageError("--refine must be >= 1");
  const PerturbationTestResult r = restricted_facet_test(f, b, o.refine);
  out << dump(serialize(r));
  return r.verdict == PerturbationVerdict::certified_unique ? kOk : kFailed;
}

int cmd_merge(const Options& o, std::ostream& out, std::ostream& err) {
  const PeriodicPWL outer = read_pwl(o.input);
  const Rational b1 = rational_flag(o.b1, "b1");
  const Certificate minimal = check_minimal(outer, b1);
  if (!minimal.passed()) {
    Certificate c = minimal;
    c.note = "outer function is not minimal for b1; merge refused";
    return emit_certificate(c, out);
  }
  if (!check_lift_nondecreasing(outer, b1).passed()) {
    err << "warning: the lift x - b1 f(x) of the outer function is not nondecreasing\n";
  }
  const Json inner_json = read_json_file(o.inner);
  const MergedFn inner =
      is_merged(inner_json) ? parse_merged(inner_json) : MergedFn::leaf(parse_pwl(inner_json), rational_flag(o.b2, "b2"));
  MergedFn F = MergedFn::leaf(outer, b1);
  try {
    F = seq_merge(outer, b1, inner);
  } catch (const std::invalid_argument& e) {
    Witness w;
    w.condition = "minimality";
    w.detail = e.what();
    return emit_certificate(Certificate::fail(std::move(w), 1, "inner function rejected; merge refused"), out);
  }
  emit_or_write(serialize(F), o.out_path, out);
  if (o.out_path) out << "arity: " << F.arity() << "\nb vector: " << join(F.b_vector()) << "\n";
  return kOk;
}

int cmd_plot(const Options& o, std::ostream& out) {
  const PeriodicPWL f = read_pwl(o.input);
  const std::string path = *o.out_path;
  const auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() && path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".csv")) {
    write_text_file(path, plot_csv(f, o.samples));
  } else if (ends_with(".svg")) {
    write_text_file(path, plot_svg(f, o.title.value_or(o.input)));
  } else {
    throw UsageError("--out must end in .csv or .svg");
  }
  out << "wrote " << path << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and certification of cut-generating functions", "groupcut"};
  app.require_subcommand(1);
  Options o;

  auto* construct = app.add_subcommand("construct", "Build a function and write it as JSON");
  construct->add_option("kind", o.kind)->required()->check(CLI::IsMember({"gmi", "pi-k", "pi-inf", "phi-m", "pi-n-k"}));
  construct->add_option("--b", o.b, "parameter b as p/q");
  construct->add_option("--k", o.k, "number of slopes, or the truncation level for pi-inf");
  construct->add_option("--m", o.m, "number of copies for phi-m");
  construct->add_option("--n", o.n, "dimension for pi-n-k");
  construct->add_option("--out", o.out_path, "output file (stdout if omitted)");

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a function at rational points");
  eval_cmd->add_option("file", o.input);
  eval_cmd->add_option("--x", o.xs, "points, or the coordinates of one point for a merged function");
  eval_cmd->add_flag("--pi-inf", o.pi_inf, "evaluate the limit function exactly");
  eval_cmd->add_option("--b", o.b);

  auto* verify = app.add_subcommand("verify", "Run one exact check");
  verify->add_option("check", o.check)
      ->required()
      ->check(CLI::IsMember({"minimal", "subadditive", "symmetry", "slopes", "zero-set"}));
  verify->add_option("file", o.input)->required();
  verify->add_option("--b", o.b);
  verify->add_option("--k", o.k);
  verify->add_option("--cap", o.cap, "brute-force grid denominator for subadditive");

  auto* certify = app.add_subcommand("certify", "Certify extremality evidence");
  certify->add_option("file", o.input)->required();
  certify->add_option("--b", o.b);
  certify->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"pwl-perturbation", "replay", "two-slope"}));
  certify->add_option("--k", o.k);
  certify->add_option("--refine", o.refine, "grid denominator for pwl-perturbation");

  auto* merge = app.add_subcommand("merge", "Sequential merge of an outer function over an inner one");
  merge->add_option("outer", o.input)->required();
  merge->add_option("inner", o.inner)->required();
  merge->add_option("--b1", o.b1);
  merge->add_option("--b2", o.b2, "parameter of a one-dimensional inner function");
  merge->add_option("--out", o.out_path);

  auto* plot = app.add_subcommand("plot", "Export a function as CSV or SVG");
  plot->add_option("file", o.input)->required();
  plot->add_option("--out", o.out_path)->required();
  plot->add_option("--samples", o.samples);
  plot->add_option("--title", o.title);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out);
    if (eval_cmd->parsed()) return cmd_eval(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (certify->parsed()) return cmd_certify(o, out);
    if (merge->parsed()) return cmd_merge(o, out, err);
    return cmd_plot(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return kUsage;
}

}  // namespace groupcut::cli
