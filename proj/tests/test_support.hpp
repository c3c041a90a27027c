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

// Shared fixtures for the unit suites.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "etpa/loss_filters.hpp"
#include "etpa/spectral_model.hpp"

namespace etpa::testing {

/// 20 GHz quoted as an ordinary frequency.
inline const double kSigma20GHz = 2.0 * std::numbers::pi * 0.02;

inline SourceParams symmetric_source() { return {5.0, 5.0, 5.0, 0.0}; }
inline SourceParams asymmetric_source() { return {5.0, 5.0, 10.0, 0.0}; }

/// Random complex amplitude on an n x n grid. `symmetry` = +1 makes it
/// exchange-symmetric, -1 antisymmetric, 0 leaves it generic.
inline JointAmplitude random_jsa(std::size_t n, unsigned seed, int symmetry = 0,
                                 double half_width = 2.0) {
  std::mt19937 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  FrequencyGrid grid(n, half_width, GridSupport::full_square);
  std::vector<Complex> v(n * n);
  for (auto& x : v) x = {gauss(rng), gauss(rng)};
  if (symmetry != 0) {
    std::vector<Complex> s(n * n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        s[j * n + k] = 0.5 * (v[j * n + k] + static_cast<double>(symmetry) * v[k * n + j]);
      }
    }
    v = std::move(s);
  }
  return JointAmplitude(grid, std::move(v));
}

inline double relative_gap(double a, double b, double floor = 0.0) {
  const double scale = std::max({std::abs(a), std::abs(b), floor});
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace etpa::testing
