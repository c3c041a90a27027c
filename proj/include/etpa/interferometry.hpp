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

// Coincidence rates behind a (possibly lossy) beamsplitter for the single-port,
// two-port (HOM) and N00N configurations, evaluated as Riemann sums over the
// joint-amplitude grid.
//
// The delay tau acts on the signal photon. Transmission and reflection
// coefficients are frequency independent. Loss (|t|^2 + |r|^2 < 1) enters only
// through the coefficients: vacuum noise adds nothing to normally ordered
// coincidences.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "etpa/spectral_model.hpp"

namespace etpa {

enum class ConfigTag { single_port, two_port, noon };

inline std::string_view to_string(ConfigTag tag) {
  switch (tag) {
    case ConfigTag::single_port: return "single_port";
    case ConfigTag::two_port: return "two_port";
    case ConfigTag::noon: return "noon";
  }
  return "unknown";
}

struct BeamSplitterSpec {
  Complex t{0.0, 1.0 / std::numbers::sqrt2};
  Complex r{1.0 / std::numbers::sqrt2, 0.0};

  /// t = i r, |t| = |r| = 1/sqrt(2).
  static BeamSplitterSpec lossless_5050() { return {}; }

  double throughput() const { return std::norm(t) + std::norm(r); }

  bool is_lossless_5050(double tol = 1e-12) const {
    return std::abs(std::norm(t) - 0.5) <= tol && std::abs(std::norm(r) - 0.5) <= tol &&
           std::abs((t * std::conj(r)).real()) <= tol;
  }

  void validate() const {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag()) || !std::isfinite(r.real()) ||
        !std::isfinite(r.imag())) {
      throw std::invalid_argument("beamsplitter: coefficients must be finite");
    }
    if (throughput() > 1.0 + 1e-12) {
      throw std::invalid_argument("beamsplitter: |t|^2 + |r|^2 exceeds 1");
    }
  }

  bool operator==(const BeamSplitterSpec&) const = default;
};

class DelayAxis {
 public:
  /// `count` odd samples spanning [-half_span, half_span].
  DelayAxis(std::size_t count, double half_span_ps) : count_(count) {
    if (count < 3 || count % 2 == 0) {
      throw std::invalid_argument("delays: count must be odd and >= 3, got " +
                                  std::to_string(count));
    }
    if (!(half_span_ps > 0.0) || !std::isfinite(half_span_ps)) {
      throw std::invalid_argument("delays: span must be positive");
    }
    const auto center = static_cast<std::ptrdiff_t>(count / 2);
    step_ = half_span_ps / static_cast<double>(center);
    values_.resize(count);
    for (std::size_t k = 0; k < count; ++k) {
      values_[k] = static_cast<double>(static_cast<std::ptrdiff_t>(k) - center) * step_;
    }
  }

  std::size_t size() const { return count_; }
  double step() const { return step_; }
  double half_span() const { return values_.back(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

  bool operator==(const DelayAxis& other) const {
    return count_ == other.count_ && step_ == other.step_;
  }

 private:
  std::size_t count_;
  double step_ = 0.0;
  std::vector<double> values_;
};

struct Trace {
  DelayAxis delays;
  std::vector<double> rates;
  ConfigTag config = ConfigTag::two_port;
  std::string label;       // short legend text, e.g. "none" or "eTPA"
  std::string provenance;  // source, filter and beamsplitter descriptors
};

namespace detail {

// exp(i nu_k tau) for every axis value.
inline std::vector<Complex> axis_phases(const FrequencyGrid& grid, double tau) {
  std::vector<Complex> out(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double x = grid[k] * tau;
    out[k] = Complex(std::cos(x), std::sin(x));
  }
  return out;
}

// Amplitude together with its exchanged copy swapped[j*n+k] = phi(k, j), laid
// out contiguously so the rate kernels stream both.
struct ExchangePair {
  const JointAmplitude& jsa;
  std::vector<Complex> swapped;

  explicit ExchangePair(const JointAmplitude& a) : jsa(a), swapped(a.size() * a.size()) {
    const std::size_t n = a.size();
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) swapped[j * n + k] = a(k, j);
    }
  }
};

inline double single_port(const ExchangePair& p, double tau, const BeamSplitterSpec& bs) {
  const auto& grid = p.jsa.grid();
  const std::size_t n = grid.size();
  const auto phase = axis_phases(grid, tau);
  const auto values = p.jsa.values();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex delayed = values[j * n + k] * (phase[j] * std::conj(phase[k]));
      acc += std::norm(delayed + p.swapped[j * n + k]);
    }
  }
  return std::norm(bs.t) * std::norm(bs.r) * acc * grid.cell_area();
}

inline double two_port(const ExchangePair& p, double tau, const BeamSplitterSpec& bs) {
  const auto& grid = p.jsa.grid();
  const std::size_t n = grid.size();
  const auto phase = axis_phases(grid, tau);
  const auto values = p.jsa.values();
  const Complex t2 = bs.t * bs.t;
  const Complex r2 = bs.r * bs.r;
  // |t|^4|phi|^2 + |r|^4|phi'|^2 + 2 Re(t^2 r*^2 phi phi'* e^{i(nu_s - nu_i) tau}) summed as
  // the squared modulus it is, so a perfect dip cancels cell by cell.
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex delayed = values[j * n + k] * (phase[j] * std::conj(phase[k]));
      acc += std::norm(t2 * delayed + r2 * p.swapped[j * n + k]);
    }
  }
  return acc * grid.cell_area();
}

inline double noon(const ExchangePair& p, double tau, const BeamSplitterSpec& bs) {
  const auto& grid = p.jsa.grid();
  const std::size_t n = grid.size();
  const auto phase = axis_phases(grid, tau);
  const auto values = p.jsa.values();
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const double weight = 2.0 + 2.0 * (phase[j] * phase[k]).real();
      acc += weight * std::norm(values[j * n + k] + p.swapped[j * n + k]);
    }
  }
  return 0.5 * std::norm(bs.t) * std::norm(bs.r) * acc * grid.cell_area();
}

inline double rate(ConfigTag config, const ExchangePair& p, double tau,
                   const BeamSplitterSpec& bs) {
  switch (config) {
    case ConfigTag::single_port: return single_port(p, tau, bs);
    case ConfigTag::two_port: return two_port(p, tau, bs);
    case ConfigTag::noon: return noon(p, tau, bs);
  }
  throw std::logic_error("rate: unknown configuration");
}

}  // namespace detail

/// |t|^2 |r|^2 sum |phi(s,i) e^{i(nu_s - nu_i) tau} + phi(i,s)|^2 dnu^2
inline double rate_single_port(const JointAmplitude& jsa, double tau,
                               const BeamSplitterSpec& bs) {
  return detail::single_port(detail::ExchangePair(jsa), tau, bs);
}

/// Two photons on opposite input ports (HOM). General constant-coefficient form:
///   |t|^4 |phi(s,i)|^2 + |r|^4 |phi(i,s)|^2
///   + 2 Re[ t^2 r*^2 phi(s,i) phi*(i,s) e^{i(nu_s - nu_i) tau} ]
inline double rate_two_port(const JointAmplitude& jsa, double tau, const BeamSplitterSpec& bs) {
  return detail::two_port(detail::ExchangePair(jsa), tau, bs);
}

/// Superposition of both photons in port a (delayed) and both in port b:
///   (|t|^2 |r|^2 / 2) sum |1 + e^{i(nu_s + nu_i) tau}|^2 |phi(s,i) + phi(i,s)|^2 dnu^2
inline double rate_noon(const JointAmplitude& jsa, double tau, const BeamSplitterSpec& bs) {
  return detail::noon(detail::ExchangePair(jsa), tau, bs);
}

inline double rate(ConfigTag config, const JointAmplitude& jsa, double tau,
                   const BeamSplitterSpec& bs) {
  return detail::rate(config, detail::ExchangePair(jsa), tau, bs);
}

/// Rate with the delay-dependent interference term removed, i.e. the level the
/// trace settles to once the delay exceeds the coherence time.
inline double interference_free_rate(ConfigTag config, const JointAmplitude& jsa,
                                     const BeamSplitterSpec& bs) {
  const std::size_t n = jsa.size();
  const double t2 = std::norm(bs.t), r2 = std::norm(bs.r);
  double acc = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex& forward = jsa(j, k);
      const Complex& swapped = jsa(k, j);
      switch (config) {
        case ConfigTag::single_port:
          acc += t2 * r2 * (std::norm(forward) + std::norm(swapped));
          break;
        case ConfigTag::two_port:
          acc += t2 * t2 * std::norm(forward) + r2 * r2 * std::norm(swapped);
          break;
        case ConfigTag::noon:
          acc += t2 * r2 * std::norm(forward + swapped);
          break;
      }
    }
  }
  return acc * jsa.grid().cell_area();
}

inline Trace scan_trace(ConfigTag config, const JointAmplitude& jsa, const DelayAxis& delays,
                        const BeamSplitterSpec& bs = BeamSplitterSpec::lossless_5050()) {
  bs.validate();
  const detail::ExchangePair pair(jsa);
  Trace trace{delays, std::vector<double>(delays.size()), config, {}, {}};
  for (std::size_t k = 0; k < delays.size(); ++k) {
    trace.rates[k] = detail::rate(config, pair, delays[k], bs);
  }
  return trace;
}

/// Symmetrized sum-frequency marginal M(nu+) = int dnu- |phi(s,i) + phi(i,s)|^2 / 4,
/// sampled on the anti-diagonals of the grid.
struct SumMarginal {
  std::vector<double> sum_frequency;  // rad/ps, 2n - 1 values
  std::vector<double> density;
  double spacing = 0.0;
};

inline SumMarginal sum_marginal(const JointAmplitude& jsa) {
  const auto& grid = jsa.grid();
  const std::size_t n = grid.size();
  SumMarginal m;
  m.spacing = grid.spacing();
  m.sum_frequency.resize(2 * n - 1);
  m.density.assign(2 * n - 1, 0.0);
  for (std::size_t p = 0; p < 2 * n - 1; ++p) {
    m.sum_frequency[p] =
        (static_cast<double>(p) - static_cast<double>(n - 1)) * grid.spacing();
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      m.density[j + k] += 0.25 * std::norm(jsa(j, k) + jsa(k, j));
    }
  }
  for (auto& d : m.density) d *= grid.spacing();
  return m;
}

/// N00N trace as a cosine transform of the sum-frequency marginal:
///   R_N(tau) = sum M(nu+) (1 + cos(nu+ tau)) dnu+
/// Only defined for the lossless 50:50 splitter.
inline Trace noon_via_sum_marginal(const JointAmplitude& jsa, const DelayAxis& delays,
                                   const BeamSplitterSpec& bs = BeamSplitterSpec::lossless_5050()) {
  if (!bs.is_lossless_5050()) {
    throw std::invalid_argument("noon_via_sum_marginal: requires the lossless 50:50 splitter");
  }
  const auto marginal = sum_marginal(jsa);
  Trace trace{delays, std::vector<double>(delays.size()), ConfigTag::noon, {}, {}};
  for (std::size_t k = 0; k < delays.size(); ++k) {
    double acc = 0.0;
    for (std::size_t p = 0; p < marginal.density.size(); ++p) {
      acc += marginal.density[p] * (1.0 + std::cos(marginal.sum_frequency[p] * delays[k]));
    }
    trace.rates[k] = acc * marginal.spacing;
  }
  return trace;
}

}  // namespace etpa
