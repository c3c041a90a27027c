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

// Sample losses as amplitude notch filters: a two-photon (eTPA) notch on the
// sum detuning and single-photon notches on the signal or idler detuning.

#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etpa/spectral_model.hpp"

namespace etpa {

enum class FilterKind { two_photon, single_signal, single_idler };

inline std::string_view to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::two_photon: return "two_photon";
    case FilterKind::single_signal: return "single_signal";
    case FilterKind::single_idler: return "single_idler";
  }
  return "unknown";
}

struct FilterSpec {
  FilterKind kind = FilterKind::two_photon;
  double sigma = 0.0;   // rad/ps
  double center = 0.0;  // rad/ps, unused for two_photon

  void validate() const {
    if (!(sigma > 0.0) || !std::isfinite(sigma)) {
      throw std::invalid_argument("filter: sigma must be positive, got " + std::to_string(sigma));
    }
    if (kind == FilterKind::two_photon && center != 0.0) {
      throw std::invalid_argument("filter: two_photon filter has no center");
    }
    if (!std::isfinite(center)) throw std::invalid_argument("filter: center must be finite");
  }

  bool operator==(const FilterSpec&) const = default;

  static FilterSpec two_photon(double sigma) { return {FilterKind::two_photon, sigma, 0.0}; }
  static FilterSpec signal(double sigma, double center = 0.0) {
    return {FilterKind::single_signal, sigma, center};
  }
  static FilterSpec idler(double sigma, double center = 0.0) {
    return {FilterKind::single_idler, sigma, center};
  }
};

/// Amplitude transmission in [0, 1); zero on the notch center.
inline double filter_value(const FilterSpec& spec, double nu_s, double nu_i) {
  double offset = 0.0;
  switch (spec.kind) {
    case FilterKind::two_photon: offset = nu_s + nu_i; break;
    case FilterKind::single_signal: offset = nu_s - spec.center; break;
    case FilterKind::single_idler: offset = nu_i - spec.center; break;
  }
  return 1.0 - std::exp(-offset * offset / (2.0 * spec.sigma * spec.sigma));
}

struct FilteredAmplitude {
  JointAmplitude amplitude;
  double survival = 1.0;  // pair survival probability
};

/// Pointwise product of the amplitude with every filter. The result is left
/// unnormalized; the filters attenuate.
inline FilteredAmplitude apply_filters(const JointAmplitude& jsa,
                                       std::span<const FilterSpec> specs) {
  for (const auto& s : specs) s.validate();
  const auto& grid = jsa.grid();
  const std::size_t n = grid.size();
  std::vector<Complex> values(jsa.values().begin(), jsa.values().end());
  if (!specs.empty()) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        // Multiply the filter factors together first so the result does not
        // depend on the order of `specs`.
        double sum_factor = 1.0, signal_factor = 1.0, idler_factor = 1.0;
        for (const auto& s : specs) {
          const double f = filter_value(s, grid[j], grid[k]);
          switch (s.kind) {
            case FilterKind::two_photon: sum_factor *= f; break;
            case FilterKind::single_signal: signal_factor *= f; break;
            case FilterKind::single_idler: idler_factor *= f; break;
          }
        }
        values[j * n + k] *= sum_factor * signal_factor * idler_factor;
      }
    }
  }
  const double before = jsa.norm_squared();
  JointAmplitude out(grid, std::move(values), NormConvention::unnormalized);
  const double after = out.norm_squared();
  return {std::move(out), before > 0.0 ? after / before : 0.0};
}

inline FilteredAmplitude apply_filters(const JointAmplitude& jsa,
                                       std::initializer_list<FilterSpec> specs) {
  return apply_filters(jsa, std::span<const FilterSpec>(specs.begin(), specs.size()));
}

}  // namespace etpa
