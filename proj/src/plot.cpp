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

#include "groupcut/plot.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace groupcut {

namespace {

std::string escape_xml(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string plot_csv(const PeriodicPWL& f, std::size_t samples) {
  std::ostringstream out;
  out << std::setprecision(17);
  out << "x,value,sample_x,sample_value\n";
  const std::size_t rows = std::max(f.size(), samples);
  for (std::size_t i = 0; i < rows; ++i) {
    if (i < f.size()) out << f.breakpoints()[i] << ',' << f.values()[i];
    else out << ',';
    out << ',';
    if (i < samples) {
      const Rational x = samples == 1 ? Rational(0) : Rational(static_cast<long>(i), static_cast<long>(samples - 1));
      out << x.to_double() << ',' << f(x).to_double();
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

std::string plot_svg(const PeriodicPWL& f, const std::string& title) {
  constexpr double width = 640, height = 400, margin = 40;
  double lo = 0, hi = 1;
  for (const Rational& v : f.values()) {
    lo = std::min(lo, v.to_double());
    hi = std::max(hi, v.to_double());
  }
  const auto px = [&](const Rational& x) { return margin + x.to_double() * (width - 2 * margin); };
  const auto py = [&](const Rational& y) { return height - margin - (y.to_double() - lo) / (hi - lo) * (height - 2 * margin); };

  std::ostringstream out;
  out << std::fixed << std::setprecision(3);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "  <title>" << escape_xml(title) << "</title>\n";
  out << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(1) << "\" y2=\"" << py(0)
      << "\" stroke=\"gray\"/>\n";
  out << "  <line x1=\"" << px(0) << "\" y1=\"" << py(Rational(0)) << "\" x2=\"" << px(0) << "\" y2=\""
      << py(Rational(1)) << "\" stroke=\"gray\"/>\n";
  out << "  <text x=\"" << px(1) << "\" y=\"" << py(0) + 16 << "\" font-size=\"12\" text-anchor=\"middle\">1</text>\n";
  out << "  <text x=\"" << px(0) - 8 << "\" y=\"" << py(1) + 4 << "\" font-size=\"12\" text-anchor=\"end\">1</text>\n";
  out << "  <text x=\"" << width / 2 << "\" y=\"20\" font-size=\"14\" text-anchor=\"middle\">" << escape_xml(title)
      << "</text>\n";
  out << "  <polyline fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" points=\"";
  for (std::size_t i = 0; i < f.size(); ++i) out << px(f.breakpoints()[i]) << ',' << py(f.values()[i]) << ' ';
  out << px(1) << ',' << py(f.values()[0]) << "\"/>\n";
  for (std::size_t i = 0; i < f.size(); ++i) {
    out << "  <circle cx=\"" << px(f.breakpoints()[i]) << "\" cy=\"" << py(f.values()[i])
        << "\" r=\"2.5\" fill=\"steelblue\"><title>(" << f.breakpoints()[i] << ", " << f.values()[i]
        << ")</title></circle>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace groupcut
