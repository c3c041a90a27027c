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

// Scenario driver: source -> filters -> interferometer -> analysis, with all
// artifacts written under an output root.

#pragma once

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "etpa/analysis.hpp"
#include "etpa/fock_oracle.hpp"
#include "etpa/interferometry.hpp"
#include "etpa/loss_filters.hpp"
#include "etpa/report.hpp"
#include "etpa/scenario.hpp"

namespace etpa {

/// A computed quantity broke one of its own invariants.
class InvariantError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScenarioRun {
  std::map<std::pair<ConfigTag, std::string>, Trace> traces;
  std::map<std::string, double> survival;  // per filter set
  MetricsMap metrics;
  std::vector<std::filesystem::path> written;

  const Trace& trace(ConfigTag config, const std::string& set) const {
    return traces.at({config, set});
  }
};

inline std::string describe(const SourceParams& s) {
  std::ostringstream os;
  os << "source(T_p=" << s.pump_duration_ps << " ps, eta_s L=" << s.eta_s_length_ps
     << " ps, eta_i L=" << s.eta_i_length_ps << " ps)";
  return os.str();
}

inline std::string describe(const BeamSplitterSpec& bs) {
  if (bs == BeamSplitterSpec::lossless_5050()) return "bs(lossless 50:50)";
  std::ostringstream os;
  os << "bs(t=" << bs.t.real() << (bs.t.imag() < 0 ? "" : "+") << bs.t.imag() << "i, r=" << bs.r.real()
     << (bs.r.imag() < 0 ? "" : "+") << bs.r.imag() << "i)";
  return os.str();
}

inline std::string describe(const Scenario& sc, const FilterSet& set) {
  std::ostringstream os;
  os << "filters(";
  for (std::size_t k = 0; k < set.filters.size(); ++k) {
    const auto& spec = sc.find_filter(set.filters[k])->spec;
    os << (k ? ", " : "") << to_string(spec.kind) << " sigma=" << spec.sigma << " rad/ps";
    if (spec.kind != FilterKind::two_photon) os << " center=" << spec.center << " rad/ps";
  }
  os << ")";
  return os.str();
}

/// Builds the unit-norm source amplitude and applies one filter set.
inline FilteredAmplitude scenario_amplitude(const Scenario& sc, const FrequencyGrid& grid,
                                            const FilterSet& set) {
  const auto jsa = build_jsa(grid, sc.source, NormConvention::unit_l2);
  const auto specs = sc.resolve(set);
  return apply_filters(jsa, specs);
}

inline void check_trace(const Trace& trace, const std::string& what) {
  for (double r : trace.rates) {
    if (!std::isfinite(r) || r < 0.0) {
      throw InvariantError(what + ": rate is negative or not finite");
    }
  }
}

inline ScenarioRun run_scenario(const Scenario& sc, const std::filesystem::path& root) {
  sc.validate();
  ScenarioRun run;
  const auto grid = sc.grid();
  const auto delays = sc.delays();
  const auto csv_dir = root / sc.output.csv_dir;

  for (const auto& set : sc.filter_sets) {
    const auto filtered = scenario_amplitude(sc, grid, set);
    run.survival[set.name] = filtered.survival;
    run.metrics.emplace_back("filter_set." + set.name + ".survival", filtered.survival);
    if (sc.output.jsi) {
      const auto path = csv_dir / ("jsi_" + set.name + ".csv");
      emit_jsi_csv(filtered.amplitude, path);
      run.written.push_back(path);
    }
    for (const auto config : sc.configurations) {
      Trace trace = scan_trace(config, filtered.amplitude, delays, sc.beamsplitter);
      trace.label = set.name;
      trace.provenance = describe(sc.source) + "; " + describe(sc, set) + "; " + describe(sc.beamsplitter);
      const std::string key = std::string(to_string(config)) + "." + set.name;
      check_trace(trace, "trace " + key);
      const auto path = csv_dir / ("trace_" + std::string(to_string(config)) + "_" + set.name + ".csv");
      emit_trace_csv(trace, path);
      run.written.push_back(path);

      const auto m = trace_metrics(trace);
      run.metrics.emplace_back("trace." + key + ".featureless", m.featureless ? 1.0 : 0.0);
      run.metrics.emplace_back("trace." + key + ".baseline", m.baseline);
      if (!m.featureless) {
        run.metrics.emplace_back("trace." + key + ".extremum_value", m.extremum_value);
        run.metrics.emplace_back("trace." + key + ".extremum_delay_ps", m.extremum_delay);
        run.metrics.emplace_back("trace." + key + ".is_peak", m.is_peak ? 1.0 : 0.0);
        run.metrics.emplace_back("trace." + key + ".visibility", m.visibility);
        run.metrics.emplace_back("trace." + key + ".width_half_ps", m.width_half);
        run.metrics.emplace_back("trace." + key + ".tail_width_ps", m.tail_width);
      }
      run.traces.emplace(std::pair{config, set.name}, std::move(trace));
    }
  }

  for (const auto& cmp : sc.comparisons) {
    const auto& a = run.trace(cmp.first.config, cmp.first.filter_set);
    const auto& b = run.trace(cmp.second.config, cmp.second.filter_set);
    const std::string key = to_string(cmp.first) + "|" + to_string(cmp.second);
    try {
      if (cmp.kind == ComparisonKind::distance) {
        run.metrics.emplace_back("distance." + key, normalized_distance(a, b));
      } else {
        run.metrics.emplace_back("tail_ratio." + key, tail_ratio(a, b));
      }
    } catch (const std::domain_error&) {
      // Featureless traces have no normalized shape to compare.
      run.metrics.emplace_back((cmp.kind == ComparisonKind::distance ? "distance." : "tail_ratio.") + key,
                               std::nan(""));
    }
  }

  const auto metrics_path = root / sc.output.metrics;
  detail::write_file(metrics_path, metrics_text(sc.name, run.metrics));
  run.written.push_back(metrics_path);

  if (!sc.output.svg_dir.empty()) {
    for (const auto config : sc.configurations) {
      std::vector<Trace> panel;
      for (const auto& set : sc.filter_sets) panel.push_back(run.trace(config, set.name));
      const auto path = root / sc.output.svg_dir / ("plot_" + std::string(to_string(config)) + ".svg");
      emit_plot_svg(panel, path, sc.name + ": " + std::string(to_string(config)));
      run.written.push_back(path);
    }
  }
  return run;
}

struct OracleComparison {
  ConfigTag config;
  std::string filter_set;
  double tau;
  double closed_form;
  double oracle;
  double relative_error;
};

inline constexpr double kOracleTolerance = 1e-10;
inline const std::vector<double>& oracle_delays() {
  static const std::vector<double> taus = {-10.0, -2.5, 0.0, 2.5, 10.0};
  return taus;
}

/// |oracle - closed form| / max(|closed form|, 1e-6 * pair norm).
inline double oracle_relative_error(double closed_form, double oracle, double pair_norm) {
  return std::abs(oracle - closed_form) / std::max(std::abs(closed_form), 1e-6 * pair_norm);
}

/// Closed-form rates against the Fock oracle for every configuration and filter
/// set of the scenario, on a coarse grid with the scenario's half width.
inline std::vector<OracleComparison> oracle_check(const Scenario& sc, std::size_t grid_points,
                                                  std::span<const double> taus = oracle_delays()) {
  sc.validate();
  const auto grid = build_grid(grid_points, sc.half_width());
  std::vector<OracleComparison> out;
  for (const auto& set : sc.filter_sets) {
    const auto filtered = scenario_amplitude(sc, grid, set);
    const double pair_norm = filtered.amplitude.norm_squared();
    for (const auto config : sc.configurations) {
      for (double tau : taus) {
        const double closed = rate(config, filtered.amplitude, tau, sc.beamsplitter);
        const double oracle = fock::oracle_rate(config, filtered.amplitude, tau, sc.beamsplitter);
        out.push_back({config, set.name, tau, closed, oracle,
                       oracle_relative_error(closed, oracle, pair_norm)});
      }
    }
  }
  return out;
}

}  // namespace etpa
