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

// Scenario files: a flat INI-style description of one source -> filters ->
// interferometer -> analysis run, plus the built-in figure presets.
//
//   name = fig3-asymmetric
//   frequency_quote = ordinary      # quoted GHz values: ordinary (2 pi f) or angular
//
//   [source]
//   pump_duration_ps = 5
//   eta_s_length_ps = 5
//   eta_i_length_ps = 10
//   central_frequency_ghz = 0
//
//   [grid]
//   points = 513
//   half_width_ghz = auto
//
//   [filter etpa]
//   kind = two_photon               # two_photon | single_signal | single_idler
//   sigma_ghz = 20
//   center_ghz = 0
//
//   [filter_set etpa]
//   filters = etpa                  # comma separated filter names, may be empty
//
//   [interferometer]
//   configurations = single_port, two_port, noon
//   beamsplitter = lossless-5050    # or give t = re, im and r = re, im
//
//   [delays]
//   points = 201
//   span_ps = 80
//
//   [output]
//   csv_dir = traces
//   svg_dir = plots                 # empty disables plots
//   metrics = metrics.txt
//   jsi = false
//
//   [compare]
//   distance = noon/none, noon/etpa
//   tail_ratio = noon/etpa, single_port/single

#pragma once

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etpa/interferometry.hpp"
#include "etpa/loss_filters.hpp"
#include "etpa/spectral_model.hpp"

namespace etpa {

/// Invalid scenario content. `field` is the dotted path of the offending entry.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(std::string field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FrequencyQuote { ordinary, angular };

/// rad/ps per quoted GHz.
inline double ghz_to_rad_per_ps(FrequencyQuote quote) {
  return quote == FrequencyQuote::ordinary ? 2.0 * std::numbers::pi * 1e-3 : 1e-3;
}

struct NamedFilter {
  std::string name;
  FilterSpec spec;
  bool operator==(const NamedFilter&) const = default;
};

struct FilterSet {
  std::string name;
  std::vector<std::string> filters;
  bool operator==(const FilterSet&) const = default;
};

struct TraceRef {
  ConfigTag config = ConfigTag::noon;
  std::string filter_set;
  bool operator==(const TraceRef&) const = default;
};

enum class ComparisonKind { distance, tail_ratio };

struct Comparison {
  ComparisonKind kind = ComparisonKind::distance;
  TraceRef first;
  TraceRef second;
  bool operator==(const Comparison&) const = default;
};

struct OutputSpec {
  std::string csv_dir = "traces";
  std::string svg_dir = "plots";
  std::string metrics = "metrics.txt";
  bool jsi = false;
  bool operator==(const OutputSpec&) const = default;
};

struct Scenario {
  std::string name = "scenario";
  FrequencyQuote frequency_quote = FrequencyQuote::ordinary;
  SourceParams source;
  std::size_t grid_points = 513;
  std::optional<double> grid_half_width;  // rad/ps; automatic when empty
  std::vector<NamedFilter> filters;
  std::vector<FilterSet> filter_sets;
  std::vector<ConfigTag> configurations;
  BeamSplitterSpec beamsplitter = BeamSplitterSpec::lossless_5050();
  std::size_t delay_points = 201;
  double delay_span_ps = 80.0;
  OutputSpec output;
  std::vector<Comparison> comparisons;

  const NamedFilter* find_filter(std::string_view n) const {
    for (const auto& f : filters) if (f.name == n) return &f;
    return nullptr;
  }
  const FilterSet* find_filter_set(std::string_view n) const {
    for (const auto& f : filter_sets) if (f.name == n) return &f;
    return nullptr;
  }

  std::vector<FilterSpec> resolve(const FilterSet& set) const {
    std::vector<FilterSpec> out;
    for (const auto& name : set.filters) out.push_back(find_filter(name)->spec);
    return out;
  }

  double half_width() const {
    if (grid_half_width) return *grid_half_width;
    std::vector<double> sigmas;
    for (const auto& f : filters) sigmas.push_back(f.spec.sigma);
    return default_half_width(source, sigmas);
  }

  FrequencyGrid grid() const { return build_grid(grid_points, half_width()); }
  DelayAxis delays() const { return DelayAxis(delay_points, delay_span_ps); }

  /// Checks every component invariant; throws ScenarioError with the field path.
  void validate() const;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  s = trim(s);
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.emplace_back(trim(s.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline double parse_double(std::string_view text, const std::string& field) {
  text = trim(text);
  double value = 0.0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ScenarioError(field, "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

inline std::size_t parse_count(std::string_view text, const std::string& field) {
  text = trim(text);
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw ScenarioError(field, "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return value;
}

inline bool parse_bool(std::string_view text, const std::string& field) {
  text = trim(text);
  if (text == "true" || text == "yes" || text == "1") return true;
  if (text == "false" || text == "no" || text == "0") return false;
  throw ScenarioError(field, "expected true or false");
}

inline Complex parse_complex(std::string_view text, const std::string& field) {
  const auto parts = split_list(text);
  if (parts.size() != 2) throw ScenarioError(field, "expected 're, im'");
  return {parse_double(parts[0], field), parse_double(parts[1], field)};
}

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

inline std::optional<ConfigTag> parse_config_tag(std::string_view s) {
  if (s == "single_port") return ConfigTag::single_port;
  if (s == "two_port") return ConfigTag::two_port;
  if (s == "noon") return ConfigTag::noon;
  return std::nullopt;
}

inline std::optional<FilterKind> parse_filter_kind(std::string_view s) {
  if (s == "two_photon") return FilterKind::two_photon;
  if (s == "single_signal") return FilterKind::single_signal;
  if (s == "single_idler") return FilterKind::single_idler;
  return std::nullopt;
}

inline TraceRef parse_trace_ref(std::string_view s, const std::string& field) {
  s = detail::trim(s);
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) throw ScenarioError(field, "expected 'configuration/filter_set'");
  const auto config = parse_config_tag(detail::trim(s.substr(0, slash)));
  if (!config) throw ScenarioError(field, "unknown configuration in '" + std::string(s) + "'");
  return {*config, std::string(detail::trim(s.substr(slash + 1)))};
}

inline std::string to_string(const TraceRef& ref) {
  return std::string(to_string(ref.config)) + "/" + ref.filter_set;
}

inline void Scenario::validate() const {
  if (name.empty()) throw ScenarioError("name", "must not be empty");
  try {
    source.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("source", e.what());
  }
  if (grid_half_width && !(*grid_half_width > 0.0)) {
    throw ScenarioError("grid.half_width_ghz", "must be positive");
  }
  try {
    build_grid(grid_points, half_width());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("grid.points", e.what());
  }
  for (const auto& f : filters) {
    try {
      f.spec.validate();
    } catch (const std::invalid_argument& e) {
      throw ScenarioError("filter." + f.name, e.what());
    }
    if (std::count_if(filters.begin(), filters.end(),
                      [&](const NamedFilter& g) { return g.name == f.name; }) > 1) {
      throw ScenarioError("filter." + f.name, "duplicate filter name");
    }
  }
  if (filter_sets.empty()) throw ScenarioError("filter_set", "at least one filter set is required");
  for (const auto& set : filter_sets) {
    if (std::count_if(filter_sets.begin(), filter_sets.end(),
                      [&](const FilterSet& g) { return g.name == set.name; }) > 1) {
      throw ScenarioError("filter_set." + set.name, "duplicate filter set name");
    }
    for (const auto& fname : set.filters) {
      if (!find_filter(fname)) {
        throw ScenarioError("filter_set." + set.name + ".filters", "unknown filter '" + fname + "'");
      }
    }
  }
  if (configurations.empty()) {
    throw ScenarioError("interferometer.configurations", "at least one configuration is required");
  }
  try {
    beamsplitter.validate();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("interferometer.beamsplitter", e.what());
  }
  try {
    delays();
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("delays", e.what());
  }
  if (output.csv_dir.empty()) throw ScenarioError("output.csv_dir", "must not be empty");
  if (output.metrics.empty()) throw ScenarioError("output.metrics", "must not be empty");
  for (std::size_t c = 0; c < comparisons.size(); ++c) {
    const std::string field = "compare[" + std::to_string(c) + "]";
    for (const auto* ref : {&comparisons[c].first, &comparisons[c].second}) {
      if (std::find(configurations.begin(), configurations.end(), ref->config) ==
          configurations.end()) {
        throw ScenarioError(field, "configuration not run: " + to_string(*ref));
      }
      if (!find_filter_set(ref->filter_set)) {
        throw ScenarioError(field, "unknown filter set: " + to_string(*ref));
      }
    }
  }
}

inline Scenario parse_scenario(std::string_view text) {
  Scenario sc;
  sc.filter_sets.clear();
  bool saw_bs_preset = false, saw_t = false, saw_r = false;
  std::string section;
  std::string section_arg;
  NamedFilter* current_filter = nullptr;
  FilterSet* current_set = nullptr;
  // Quoted frequencies are converted after the whole file is read, since
  // frequency_quote may appear anywhere.
  std::vector<std::pair<std::string, double>> pending_filter_sigma, pending_filter_center;
  std::optional<double> quoted_half_width, quoted_central;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.npos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ScenarioError("line " + std::to_string(line_no), "unterminated section header");
      }
      const auto inner = detail::trim(line.substr(1, line.size() - 2));
      const auto space = inner.find_first_of(" \t");
      section = std::string(inner.substr(0, space));
      section_arg = space == std::string_view::npos ? "" : std::string(detail::trim(inner.substr(space)));
      current_filter = nullptr;
      current_set = nullptr;
      if (section == "filter") {
        if (section_arg.empty()) throw ScenarioError("filter", "section needs a name: [filter NAME]");
        sc.filters.push_back({section_arg, FilterSpec{FilterKind::two_photon, 0.0, 0.0}});
        current_filter = &sc.filters.back();
      } else if (section == "filter_set") {
        if (section_arg.empty()) throw ScenarioError("filter_set", "section needs a name: [filter_set NAME]");
        sc.filter_sets.push_back({section_arg, {}});
        current_set = &sc.filter_sets.back();
      } else if (section != "source" && section != "grid" && section != "interferometer" &&
                 section != "delays" && section != "output" && section != "compare") {
        throw ScenarioError(section, "unknown section");
      }
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ScenarioError("line " + std::to_string(line_no), "expected 'key = value'");
    }
    const std::string key(detail::trim(line.substr(0, eq)));
    const std::string_view value = detail::trim(line.substr(eq + 1));
    const std::string prefix = section.empty() ? "" : section + (section_arg.empty() ? "" : "." + section_arg) + ".";
    const std::string field = prefix + key;
    auto unknown = [&] { return ScenarioError(field, "unknown key"); };

    if (section.empty()) {
      if (key == "name") {
        sc.name = std::string(value);
      } else if (key == "frequency_quote") {
        if (value == "ordinary") sc.frequency_quote = FrequencyQuote::ordinary;
        else if (value == "angular") sc.frequency_quote = FrequencyQuote::angular;
        else throw ScenarioError(field, "expected ordinary or angular");
      } else {
        throw unknown();
      }
    } else if (section == "source") {
      if (key == "pump_duration_ps") sc.source.pump_duration_ps = detail::parse_double(value, field);
      else if (key == "eta_s_length_ps") sc.source.eta_s_length_ps = detail::parse_double(value, field);
      else if (key == "eta_i_length_ps") sc.source.eta_i_length_ps = detail::parse_double(value, field);
      else if (key == "central_frequency_ghz") quoted_central = detail::parse_double(value, field);
      else throw unknown();
    } else if (section == "grid") {
      if (key == "points") {
        sc.grid_points = detail::parse_count(value, field);
      } else if (key == "half_width_ghz") {
        if (value == "auto") quoted_half_width.reset();
        else quoted_half_width = detail::parse_double(value, field);
      } else {
        throw unknown();
      }
    } else if (section == "filter") {
      if (key == "kind") {
        const auto kind = parse_filter_kind(value);
        if (!kind) throw ScenarioError(field, "unknown filter kind '" + std::string(value) + "'");
        current_filter->spec.kind = *kind;
      } else if (key == "sigma_ghz") {
        pending_filter_sigma.emplace_back(current_filter->name, detail::parse_double(value, field));
      } else if (key == "center_ghz") {
        pending_filter_center.emplace_back(current_filter->name, detail::parse_double(value, field));
      } else {
        throw unknown();
      }
    } else if (section == "filter_set") {
      if (key == "filters") current_set->filters = detail::split_list(value);
      else throw unknown();
    } else if (section == "interferometer") {
      if (key == "configurations") {
        sc.configurations.clear();
        for (const auto& item : detail::split_list(value)) {
          const auto tag = parse_config_tag(item);
          if (!tag) throw ScenarioError(field, "unknown configuration '" + item + "'");
          if (std::find(sc.configurations.begin(), sc.configurations.end(), *tag) ==
              sc.configurations.end()) {
            sc.configurations.push_back(*tag);
          }
        }
      } else if (key == "beamsplitter") {
        if (value != "lossless-5050") throw ScenarioError(field, "only preset is 'lossless-5050'");
        sc.beamsplitter = BeamSplitterSpec::lossless_5050();
        saw_bs_preset = true;
      } else if (key == "t") {
        sc.beamsplitter.t = detail::parse_complex(value, field);
        saw_t = true;
      } else if (key == "r") {
        sc.beamsplitter.r = detail::parse_complex(value, field);
        saw_r = true;
      } else {
        throw unknown();
      }
    } else if (section == "delays") {
      if (key == "points") sc.delay_points = detail::parse_count(value, field);
      else if (key == "span_ps") sc.delay_span_ps = detail::parse_double(value, field);
      else throw unknown();
    } else if (section == "output") {
      if (key == "csv_dir") sc.output.csv_dir = std::string(value);
      else if (key == "svg_dir") sc.output.svg_dir = std::string(value);
      else if (key == "metrics") sc.output.metrics = std::string(value);
      else if (key == "jsi") sc.output.jsi = detail::parse_bool(value, field);
      else throw unknown();
    } else if (section == "compare") {
      Comparison cmp;
      if (key == "distance") cmp.kind = ComparisonKind::distance;
      else if (key == "tail_ratio") cmp.kind = ComparisonKind::tail_ratio;
      else throw unknown();
      const auto refs = detail::split_list(value);
      if (refs.size() != 2) throw ScenarioError(field, "expected two trace references");
      cmp.first = parse_trace_ref(refs[0], field);
      cmp.second = parse_trace_ref(refs[1], field);
      sc.comparisons.push_back(std::move(cmp));
    }
  }
  if (saw_bs_preset && (saw_t || saw_r)) {
    throw ScenarioError("interferometer.beamsplitter", "give either the preset or t and r, not both");
  }
  if (saw_t != saw_r) throw ScenarioError("interferometer", "t and r must be given together");

  const double factor = ghz_to_rad_per_ps(sc.frequency_quote);
  for (const auto& [fname, sigma] : pending_filter_sigma) {
    for (auto& f : sc.filters) if (f.name == fname) f.spec.sigma = sigma * factor;
  }
  for (const auto& [fname, center] : pending_filter_center) {
    for (auto& f : sc.filters) if (f.name == fname) f.spec.center = center * factor;
  }
  if (quoted_half_width) sc.grid_half_width = *quoted_half_width * factor;
  if (quoted_central) sc.source.central_frequency = *quoted_central * factor;
  sc.validate();
  return sc;
}

inline std::string serialize_scenario(const Scenario& sc) {
  const double factor = ghz_to_rad_per_ps(sc.frequency_quote);
  auto num = detail::format_double;
  auto ghz = [&](double rad_per_ps) { return num(rad_per_ps / factor); };
  std::ostringstream os;
  os << "name = " << sc.name << "\n";
  os << "frequency_quote = "
     << (sc.frequency_quote == FrequencyQuote::ordinary ? "ordinary" : "angular") << "\n\n";
  os << "[source]\n"
     << "pump_duration_ps = " << num(sc.source.pump_duration_ps) << "\n"
     << "eta_s_length_ps = " << num(sc.source.eta_s_length_ps) << "\n"
     << "eta_i_length_ps = " << num(sc.source.eta_i_length_ps) << "\n"
     << "central_frequency_ghz = " << ghz(sc.source.central_frequency) << "\n\n";
  os << "[grid]\n"
     << "points = " << sc.grid_points << "\n"
     << "half_width_ghz = " << (sc.grid_half_width ? ghz(*sc.grid_half_width) : "auto") << "\n\n";
  for (const auto& f : sc.filters) {
    os << "[filter " << f.name << "]\n"
       << "kind = " << to_string(f.spec.kind) << "\n"
       << "sigma_ghz = " << ghz(f.spec.sigma) << "\n"
       << "center_ghz = " << ghz(f.spec.center) << "\n\n";
  }
  for (const auto& set : sc.filter_sets) {
    os << "[filter_set " << set.name << "]\nfilters =";
    for (std::size_t k = 0; k < set.filters.size(); ++k) {
      os << (k == 0 ? " " : ", ") << set.filters[k];
    }
    os << "\n\n";
  }
  os << "[interferometer]\nconfigurations =";
  for (std::size_t k = 0; k < sc.configurations.size(); ++k) {
    os << (k == 0 ? " " : ", ") << to_string(sc.configurations[k]);
  }
  os << "\n";
  if (sc.beamsplitter == BeamSplitterSpec::lossless_5050()) {
    os << "beamsplitter = lossless-5050\n\n";
  } else {
    os << "t = " << num(sc.beamsplitter.t.real()) << ", " << num(sc.beamsplitter.t.imag()) << "\n"
       << "r = " << num(sc.beamsplitter.r.real()) << ", " << num(sc.beamsplitter.r.imag()) << "\n\n";
  }
  os << "[delays]\n"
     << "points = " << sc.delay_points << "\n"
     << "span_ps = " << num(sc.delay_span_ps) << "\n\n";
  os << "[output]\n"
     << "csv_dir = " << sc.output.csv_dir << "\n"
     << "svg_dir = " << sc.output.svg_dir << "\n"
     << "metrics = " << sc.output.metrics << "\n"
     << "jsi = " << (sc.output.jsi ? "true" : "false") << "\n";
  if (!sc.comparisons.empty()) {
    os << "\n[compare]\n";
    for (const auto& c : sc.comparisons) {
      os << (c.kind == ComparisonKind::distance ? "distance" : "tail_ratio") << " = "
         << to_string(c.first) << ", " << to_string(c.second) << "\n";
    }
  }
  return os.str();
}

inline Scenario load_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read scenario file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

inline const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"fig2a", "fig2b", "fig2c",
                                                 "fig2d", "fig3-symmetric", "fig3-asymmetric"};
  return names;
}

/// Built-in presets: T_p = 5 ps, all filter bandwidths 20 GHz; symmetric sources
/// use eta_s L = eta_i L = T_p, asymmetric ones eta_s L = eta_i L / 2 = T_p.
inline Scenario preset_scenario(std::string_view name) {
  const double sigma = 20.0 * ghz_to_rad_per_ps(FrequencyQuote::ordinary);
  Scenario sc;
  sc.name = std::string(name);
  sc.configurations = {ConfigTag::single_port, ConfigTag::two_port, ConfigTag::noon};
  const bool asymmetric = name == "fig2c" || name == "fig2d" || name == "fig3-asymmetric";
  sc.source = SourceParams{5.0, 5.0, asymmetric ? 10.0 : 5.0, 0.0};

  if (name == "fig3-symmetric" || name == "fig3-asymmetric") {
    sc.filters = {{"etpa", FilterSpec::two_photon(sigma)}, {"single", FilterSpec::signal(sigma)}};
    sc.filter_sets = {{"none", {}}, {"etpa", {"etpa"}}, {"single", {"single"}}};
    using C = ConfigTag;
    sc.comparisons = {
        {ComparisonKind::distance, {C::noon, "none"}, {C::noon, "single"}},
        {ComparisonKind::distance, {C::noon, "none"}, {C::noon, "etpa"}},
        {ComparisonKind::distance, {C::single_port, "none"}, {C::single_port, "etpa"}},
        {ComparisonKind::distance, {C::two_port, "none"}, {C::two_port, "etpa"}},
        {ComparisonKind::distance, {C::single_port, "none"}, {C::single_port, "single"}},
        {ComparisonKind::distance, {C::two_port, "none"}, {C::two_port, "single"}},
        {ComparisonKind::tail_ratio, {C::noon, "etpa"}, {C::single_port, "single"}},
        {ComparisonKind::tail_ratio, {C::noon, "etpa"}, {C::two_port, "single"}},
    };
    return sc;
  }

  if (name == "fig2a") {
    sc.filters = {{"etpa", FilterSpec::two_photon(sigma)}};
  } else if (name == "fig2b") {
    sc.filters = {{"signal", FilterSpec::signal(sigma)}};
  } else if (name == "fig2c") {
    sc.filters = {{"signal", FilterSpec::signal(sigma)}, {"idler", FilterSpec::idler(sigma)}};
  } else if (name == "fig2d") {
    sc.filters = {{"etpa", FilterSpec::two_photon(sigma)},
                  {"signal", FilterSpec::signal(sigma)},
                  {"idler", FilterSpec::idler(sigma)}};
  } else {
    throw ScenarioError("preset", "unknown preset '" + std::string(name) + "'");
  }
  FilterSet filtered{"filtered", {}};
  for (const auto& f : sc.filters) filtered.filters.push_back(f.name);
  sc.filter_sets = {{"none", {}}, filtered};
  sc.output.jsi = true;
  sc.comparisons = {{ComparisonKind::distance, {ConfigTag::noon, "none"}, {ConfigTag::noon, "filtered"}}};
  return sc;
}

}  // namespace etpa
