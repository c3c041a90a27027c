// Copyright 2026 The etpa-interferometry Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// File output: JSI matrices and traces as CSV, metrics as key = value text,
// and multi-trace panels as standalone SVG.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "etpa/analysis.hpp"
#include "etpa/interferometry.hpp"
#include "etpa/scenario.hpp"
#include "etpa/spectral_model.hpp"

namespace etpa {

namespace detail {

inline void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << contents;
  out.close();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace detail

/// |phi|^2 matrix: the header row holds the idler axis, the first column the
/// signal axis.
inline std::string jsi_csv(const JointAmplitude& jsa) {
  const auto& grid = jsa.grid();
  const std::size_t n = grid.size();
  std::string out = "nu_s\\nu_i";
  for (std::size_t k = 0; k < n; ++k) out += "," + detail::format_double(grid[k]);
  out += "\n";
  for (std::size_t j = 0; j < n; ++j) {
    out += detail::format_double(grid[j]);
    for (std::size_t k = 0; k < n; ++k) out += "," + detail::format_double(std::norm(jsa(j, k)));
    out += "\n";
  }
  return out;
}

inline void emit_jsi_csv(const JointAmplitude& jsa, const std::filesystem::path& path) {
  detail::write_file(path, jsi_csv(jsa));
}

struct JsiTable {
  std::vector<double> nu_s;
  std::vector<double> nu_i;
  std::vector<std::vector<double>> intensity;  // [signal][idler]
};

inline JsiTable parse_jsi_csv(std::string_view text) {
  JsiTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = detail::split_list(line);
    if (header) {
      for (std::size_t k = 1; k < cells.size(); ++k) table.nu_i.push_back(detail::parse_double(cells[k], "jsi.header"));
      header = false;
      continue;
    }
    if (cells.size() != table.nu_i.size() + 1) throw IoError("jsi csv: ragged row");
    table.nu_s.push_back(detail::parse_double(cells[0], "jsi.nu_s"));
    auto& row = table.intensity.emplace_back();
    for (std::size_t k = 1; k < cells.size(); ++k) row.push_back(detail::parse_double(cells[k], "jsi.cell"));
  }
  return table;
}

/// tau_ps, rate, rate_normalized (rate over the trace baseline).
inline std::string trace_csv(const Trace& trace) {
  const double baseline = trace_baseline(trace);
  std::string out = "tau_ps,rate,rate_normalized\n";
  for (std::size_t k = 0; k < trace.rates.size(); ++k) {
    const double normalized = baseline != 0.0 ? trace.rates[k] / baseline : 0.0;
    out += detail::format_double(trace.delays[k]) + "," + detail::format_double(trace.rates[k]) +
           "," + detail::format_double(normalized) + "\n";
  }
  return out;
}

inline void emit_trace_csv(const Trace& trace, const std::filesystem::path& path) {
  detail::write_file(path, trace_csv(trace));
}

/// Ordered key = value lines.
using MetricsMap = std::vector<std::pair<std::string, double>>;

inline std::string metrics_text(std::string_view scenario_name, const MetricsMap& metrics) {
  std::string out = "# metrics for scenario " + std::string(scenario_name) + "\n";
  for (const auto& [key, value] : metrics) out += key + " = " + detail::format_double(value) + "\n";
  return out;
}

inline std::string plot_svg(std::span<const Trace> traces, std::string_view title = {}) {
  if (traces.empty()) throw std::invalid_argument("plot: no traces");
  for (const auto& t : traces) {
    if (!(t.delays == traces.front().delays)) {
      throw std::invalid_argument("plot: traces use different delay axes");
    }
  }
  constexpr double width = 640, height = 420;
  constexpr double left = 70, right = 170, top = 40, bottom = 60;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  const auto& delays = traces.front().delays;

  std::vector<std::vector<double>> ys;
  double y_min = 0.0, y_max = 1.0;
  for (const auto& t : traces) {
    const double baseline = trace_baseline(t);
    auto& y = ys.emplace_back();
    for (double r : t.rates) y.push_back(baseline != 0.0 ? r / baseline : 0.0);
    y_min = std::min(y_min, *std::min_element(y.begin(), y.end()));
    y_max = std::max(y_max, *std::max_element(y.begin(), y.end()));
  }
  if (y_max - y_min < 1e-12) y_max = y_min + 1.0;
  const double pad = 0.05 * (y_max - y_min);
  y_min -= pad;
  y_max += pad;
  const double x_min = delays[0], x_max = delays[delays.size() - 1];
  auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
  auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * plot_h; };
  auto fmt = [](double v, const char* spec) {
    char buf[32];
    std::snprintf(buf, sizeof buf, spec, v);
    return std::string(buf);
  };

  static constexpr const char* colors[] = {"#1f77b4", "#d62728", "#e6a700", "#2ca02c", "#9467bd", "#8c564b"};
  static constexpr const char* dashes[] = {"", "8,4", "8,3,2,3", "2,3", "12,4", "4,4"};

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!title.empty()) {
    os << "<text x=\"" << left + plot_w / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">"
       << detail::xml_escape(title) << "</text>\n";
  }
  os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << plot_w << "\" height=\"" << plot_h
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int k = 0; k <= 4; ++k) {
    const double xv = x_min + (x_max - x_min) * k / 4.0;
    const double yv = y_min + (y_max - y_min) * k / 4.0;
    os << "<text x=\"" << fmt(px(xv), "%.2f") << "\" y=\"" << top + plot_h + 16
       << "\" text-anchor=\"middle\">" << fmt(xv, "%.3g") << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << fmt(py(yv) + 4, "%.2f")
       << "\" text-anchor=\"end\">" << fmt(yv, "%.3g") << "</text>\n";
  }
  os << "<text x=\"" << left + plot_w / 2 << "\" y=\"" << height - 16
     << "\" text-anchor=\"middle\">\xCF\x84 (ps)</text>\n";
  os << "<text transform=\"translate(18," << top + plot_h / 2
     << ") rotate(-90)\" text-anchor=\"middle\">normalized coincidence rate</text>\n";
  for (std::size_t t = 0; t < traces.size(); ++t) {
    const char* color = colors[t % std::size(colors)];
    const char* dash = dashes[t % std::size(dashes)];
    os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (*dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << " points=\"";
    for (std::size_t k = 0; k < ys[t].size(); ++k) {
      os << (k ? " " : "") << fmt(px(delays[k]), "%.2f") << "," << fmt(py(ys[t][k]), "%.2f");
    }
    os << "\"/>\n";
    const double ly = top + 14 + 18.0 * static_cast<double>(t);
    const std::string label = traces[t].label.empty() ? traces[t].provenance : traces[t].label;
    os << "<line x1=\"" << left + plot_w + 10 << "\" y1=\"" << ly << "\" x2=\"" << left + plot_w + 40
       << "\" y2=\"" << ly << "\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
    if (*dash) os << " stroke-dasharray=\"" << dash << "\"";
    os << "/>\n<text class=\"legend\" x=\"" << left + plot_w + 46 << "\" y=\"" << ly + 4 << "\">"
       << detail::xml_escape(label) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

inline void emit_plot_svg(std::span<const Trace> traces, const std::filesystem::path& path,
                          std::string_view title = {}) {
  detail::write_file(path, plot_svg(traces, title));
}

}  // namespace etpa
