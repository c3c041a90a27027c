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

// Brute-force coincidence counting in a discrete-mode Fock picture.
//
// A biphoton is stored as a symmetric amplitude matrix psi[x][y] over the 2n
// creation operators x = (port, bin), representing
//   |psi> = sum_{x,y} psi[x][y] c_x^dagger c_y^dagger |0>.
// The beamsplitter acts linearly on each creation-operator slot and the
// coincidence probability is read off the a/b cross block. None of the
// closed-form rate expressions are used here.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "etpa/interferometry.hpp"
#include "etpa/spectral_model.hpp"

namespace etpa::fock {

enum class Port : std::size_t { a = 0, b = 1 };

inline constexpr std::size_t kMaxModesPerPort = 65;

class DiscreteBiphoton {
 public:
  explicit DiscreteBiphoton(std::size_t modes_per_port)
      : modes_(modes_per_port), psi_(4 * modes_per_port * modes_per_port, Complex{}) {}

  std::size_t modes_per_port() const { return modes_; }
  std::size_t dimension() const { return 2 * modes_; }

  std::size_t mode(Port p, std::size_t bin) const {
    return static_cast<std::size_t>(p) * modes_ + bin;
  }

  const Complex& operator()(std::size_t x, std::size_t y) const {
    return psi_[x * dimension() + y];
  }
  const Complex& at(Port p1, std::size_t m1, Port p2, std::size_t m2) const {
    return (*this)(mode(p1, m1), mode(p2, m2));
  }

  /// Adds amplitude * c_x^dagger c_y^dagger, split evenly over both slot orders.
  void add_pair(std::size_t x, std::size_t y, Complex amplitude) {
    psi_[x * dimension() + y] += 0.5 * amplitude;
    psi_[y * dimension() + x] += 0.5 * amplitude;
  }

  /// <psi|psi> for the bosonic state: 2 sum |psi|^2 when psi is symmetric.
  double norm_squared() const {
    double acc = 0.0;
    for (const auto& v : psi_) acc += std::norm(v);
    return 2.0 * acc;
  }

  void scale(double factor) {
    for (auto& v : psi_) v *= factor;
  }

  /// Squared norm removed by `prepare_input`; multiply probabilities by it to
  /// recover the unnormalized coincidence rate.
  double input_weight = 1.0;

  friend DiscreteBiphoton apply_bs(const DiscreteBiphoton& state, const BeamSplitterSpec& bs);

 private:
  std::size_t modes_;
  std::vector<Complex> psi_;
};

/// Builds the pre-beamsplitter state for a configuration with the signal photon
/// delayed by tau. Grid cell amplitudes are weighted by the bin width so that
/// the discrete modes carry the continuum normalization, then the state is
/// rescaled to unit norm.
inline DiscreteBiphoton prepare_input(ConfigTag config, const JointAmplitude& jsa, double tau) {
  const auto& grid = jsa.grid();
  const std::size_t n = grid.size();
  if (n > kMaxModesPerPort) {
    throw std::invalid_argument("fock oracle: grid has " + std::to_string(n) +
                                " bins per axis, limit is " + std::to_string(kMaxModesPerPort));
  }
  DiscreteBiphoton state(n);
  const double bin = grid.spacing();
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex phi = jsa(s, i) * bin;
      if (phi == Complex{}) continue;
      switch (config) {
        case ConfigTag::single_port:
          state.add_pair(state.mode(Port::a, s), state.mode(Port::a, i),
                         phi * std::polar(1.0, grid[s] * tau));
          break;
        case ConfigTag::two_port:
          state.add_pair(state.mode(Port::a, s), state.mode(Port::b, i),
                         phi * std::polar(1.0, grid[s] * tau));
          break;
        case ConfigTag::noon: {
          const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
          state.add_pair(state.mode(Port::a, s), state.mode(Port::a, i),
                         inv_sqrt2 * phi * std::polar(1.0, (grid[s] + grid[i]) * tau));
          state.add_pair(state.mode(Port::b, s), state.mode(Port::b, i), inv_sqrt2 * phi);
          break;
        }
      }
    }
  }
  const double weight = state.norm_squared();
  if (weight > 0.0) {
    state.scale(1.0 / std::sqrt(weight));
    state.input_weight = weight;
  } else {
    state.input_weight = 0.0;
  }
  return state;
}

/// c_a^dagger(m) -> t c_a^dagger(m) + r c_b^dagger(m), c_b^dagger(m) -> t c_b^dagger(m) + r c_a^dagger(m).
/// Amplitude routed into the loss channel is dropped, so the norm shrinks by
/// the two-photon survival probability.
inline DiscreteBiphoton apply_bs(const DiscreteBiphoton& state, const BeamSplitterSpec& bs) {
  bs.validate();
  const std::size_t n = state.modes_per_port();
  const std::size_t d = state.dimension();
  // U[out_port][in_port], identical for every frequency bin.
  const Complex u[2][2] = {{bs.t, bs.r}, {bs.r, bs.t}};

  // First slot: half[x'][y] = sum_x U[x'][x] psi[x][y]
  std::vector<Complex> half(d * d, Complex{});
  for (std::size_t po = 0; po < 2; ++po) {
    for (std::size_t pi = 0; pi < 2; ++pi) {
      for (std::size_t m = 0; m < n; ++m) {
        const std::size_t xo = po * n + m;
        const std::size_t xi = pi * n + m;
        for (std::size_t y = 0; y < d; ++y) half[xo * d + y] += u[po][pi] * state.psi_[xi * d + y];
      }
    }
  }
  // Second slot: out[x'][y'] = sum_y U[y'][y] half[x'][y]
  DiscreteBiphoton out(n);
  out.input_weight = state.input_weight;
  for (std::size_t x = 0; x < d; ++x) {
    for (std::size_t po = 0; po < 2; ++po) {
      for (std::size_t pi = 0; pi < 2; ++pi) {
        for (std::size_t m = 0; m < n; ++m) {
          out.psi_[x * d + po * n + m] += u[po][pi] * half[x * d + pi * n + m];
        }
      }
    }
  }
  return out;
}

/// Probability of exactly one photon in output port a and one in port b,
/// summed over both photons' frequency bins. Each (a,m1),(b,m2) pair is a
/// distinct pair of modes, including m1 == m2.
inline double coincidence_probability(const DiscreteBiphoton& state) {
  const std::size_t n = state.modes_per_port();
  double acc = 0.0;
  for (std::size_t m1 = 0; m1 < n; ++m1) {
    for (std::size_t m2 = 0; m2 < n; ++m2) {
      // <0| c_b(m2) c_a(m1) |psi> collects both slot orders.
      const Complex amp = state.at(Port::a, m1, Port::b, m2) + state.at(Port::b, m2, Port::a, m1);
      acc += std::norm(amp);
    }
  }
  return acc;
}

/// Oracle coincidence rate with the continuum normalization of the closed-form
/// rates: probability times the input state's squared norm.
inline double oracle_rate(ConfigTag config, const JointAmplitude& jsa, double tau,
                          const BeamSplitterSpec& bs) {
  const auto out = apply_bs(prepare_input(config, jsa, tau), bs);
  return coincidence_probability(out) * out.input_weight;
}

}  // namespace etpa::fock
