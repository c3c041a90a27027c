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

// SPDC joint spectral amplitude on a uniform signal/idler detuning grid.
//
// Units: angular frequencies in rad/ps, times in ps.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace etpa {

using Complex = std::complex<double>;

/// Which cells of the square grid carry amplitude.
///
/// `difference_band` keeps |nu_s - nu_i| <= half_width, the largest band in the
/// difference frequency whose extent does not depend on the sum frequency. It
/// plays the role of the detection bandwidth for sources whose amplitude does
/// not decay along the anti-diagonal.
enum class GridSupport { full_square, difference_band };

class FrequencyGrid {
 public:
  FrequencyGrid(std::size_t n_points, double half_width,
                GridSupport support = GridSupport::difference_band)
      : n_points_(n_points), half_width_(half_width), support_(support) {
    if (n_points < 9 || n_points % 2 == 0) {
      throw std::invalid_argument("grid: n_points must be odd and >= 9, got " +
                                  std::to_string(n_points));
    }
    if (!(half_width > 0.0) || !std::isfinite(half_width)) {
      throw std::invalid_argument("grid: half_width must be positive and finite");
    }
    spacing_ = 2.0 * half_width / static_cast<double>(n_points - 1);
    const auto center = static_cast<std::ptrdiff_t>(n_points / 2);
    axis_.resize(n_points);
    // Integer offsets keep the axis exactly antisymmetric: axis[k] == -axis[n-1-k].
    for (std::size_t k = 0; k < n_points; ++k) {
      axis_[k] = static_cast<double>(static_cast<std::ptrdiff_t>(k) - center) * spacing_;
    }
  }

  std::size_t size() const { return n_points_; }
  std::size_t center_index() const { return n_points_ / 2; }
  double half_width() const { return half_width_; }
  double spacing() const { return spacing_; }
  double cell_area() const { return spacing_ * spacing_; }
  GridSupport support() const { return support_; }
  std::span<const double> axis() const { return axis_; }
  double operator[](std::size_t k) const { return axis_[k]; }

  bool in_support(std::size_t j, std::size_t k) const {
    if (support_ == GridSupport::full_square) return true;
    const std::size_t diff = j > k ? j - k : k - j;
    return diff <= center_index();
  }

  bool operator==(const FrequencyGrid& other) const {
    return n_points_ == other.n_points_ && half_width_ == other.half_width_ &&
           support_ == other.support_;
  }

 private:
  std::size_t n_points_;
  double half_width_;
  double spacing_ = 0.0;
  GridSupport support_;
  std::vector<double> axis_;
};

inline FrequencyGrid build_grid(std::size_t n_points, double half_width,
                                GridSupport support = GridSupport::difference_band) {
  return FrequencyGrid(n_points, half_width, support);
}

/// Pump duration and crystal-length-weighted group-velocity mismatches.
struct SourceParams {
  double pump_duration_ps = 5.0;
  double eta_s_length_ps = 5.0;  // eta_s * L
  double eta_i_length_ps = 5.0;  // eta_i * L
  double central_frequency = 0.0;  // rad/ps, metadata only

  bool exchange_symmetric() const { return eta_s_length_ps == eta_i_length_ps; }

  void validate() const {
    if (!(pump_duration_ps > 0.0) || !std::isfinite(pump_duration_ps)) {
      throw std::invalid_argument("source: pump_duration_ps must be positive");
    }
    if (!std::isfinite(eta_s_length_ps) || !std::isfinite(eta_i_length_ps)) {
      throw std::invalid_argument("source: eta*L products must be finite");
    }
  }

  bool operator==(const SourceParams&) const = default;
};

/// Gaussian pump spectrum, a function of the sum detuning only.
inline double pump_envelope(double nu_s, double nu_i, double pump_duration_ps) {
  if (!(pump_duration_ps > 0.0)) {
    throw std::invalid_argument("pump_envelope: pump duration must be positive");
  }
  const double sum = nu_s + nu_i;
  return std::exp(-2.0 * pump_duration_ps * pump_duration_ps * sum * sum);
}

inline double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

/// sinc(x) * exp(-i x) with x = (eta_s L nu_s + eta_i L nu_i) / 2.
inline Complex phase_matching(double nu_s, double nu_i, double eta_s_length_ps,
                              double eta_i_length_ps) {
  const double x = 0.5 * (eta_s_length_ps * nu_s + eta_i_length_ps * nu_i);
  return sinc(x) * Complex(std::cos(x), -std::sin(x));
}

enum class NormConvention { unnormalized, unit_l2 };

/// Complex amplitude sampled on a grid, row-major with the signal index first.
class JointAmplitude {
 public:
  JointAmplitude(FrequencyGrid grid, std::vector<Complex> values,
                 NormConvention convention = NormConvention::unnormalized)
      : grid_(std::move(grid)), values_(std::move(values)), convention_(convention) {
    if (values_.size() != grid_.size() * grid_.size()) {
      throw std::invalid_argument("JointAmplitude: value count does not match grid");
    }
  }

  const FrequencyGrid& grid() const { return grid_; }
  std::size_t size() const { return grid_.size(); }
  NormConvention norm_convention() const { return convention_; }
  std::span<const Complex> values() const { return values_; }

  /// phi(nu_s[j], nu_i[k])
  const Complex& operator()(std::size_t j, std::size_t k) const {
    return values_[j * grid_.size() + k];
  }

  /// Sum of |phi|^2 times the cell area.
  double norm_squared() const {
    double acc = 0.0;
    for (const auto& v : values_) acc += std::norm(v);
    return acc * grid_.cell_area();
  }

 private:
  FrequencyGrid grid_;
  std::vector<Complex> values_;
  NormConvention convention_;
};

/// Sum-frequency bandwidths of the filters matter for the grid extent; pass any
/// filter sigmas that will be applied later.
inline double default_half_width(const SourceParams& src,
                                 std::span<const double> filter_sigmas = {}) {
  double scale = 1.0 / src.pump_duration_ps;
  for (double s : filter_sigmas) scale = std::max(scale, s);
  const double gvm = std::abs(src.eta_s_length_ps) + std::abs(src.eta_i_length_ps);
  if (gvm > 0.0) scale = std::max(scale, 2.0 * std::numbers::pi / gvm);
  return 6.0 * scale;
}

inline JointAmplitude build_jsa(const FrequencyGrid& grid, const SourceParams& src,
                                NormConvention convention = NormConvention::unit_l2) {
  src.validate();
  const std::size_t n = grid.size();
  std::vector<Complex> values(n * n, Complex{});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!grid.in_support(j, k)) continue;
      values[j * n + k] = pump_envelope(grid[j], grid[k], src.pump_duration_ps) *
                          phase_matching(grid[j], grid[k], src.eta_s_length_ps,
                                         src.eta_i_length_ps);
    }
  }
  if (convention == NormConvention::unit_l2) {
    double acc = 0.0;
    for (const auto& v : values) acc += std::norm(v);
    const double norm = std::sqrt(acc * grid.cell_area());
    if (!(norm > 0.0)) throw std::domain_error("build_jsa: amplitude vanishes on grid");
    const double scale = 1.0 / norm;
    for (auto& v : values) v *= scale;
  }
  return JointAmplitude(grid, std::move(values), convention);
}

}  // namespace etpa
