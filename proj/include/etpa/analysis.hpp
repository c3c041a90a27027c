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

// Feature extraction from coincidence traces: baseline, dip/peak position and
// depth, widths, and shape comparisons between traces.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "etpa/interferometry.hpp"

namespace etpa {

struct MetricOptions {
  double outer_fraction = 0.1;  // samples per side used for the baseline
  double tail_level = 0.1;      // fraction of feature height defining the tails
  double flat_tolerance = 1e-9;  // feature height relative to the trace scale
};

struct TraceMetrics {
  bool featureless = false;
  bool is_peak = false;
  double baseline = 0.0;
  double extremum_value = 0.0;
  double extremum_delay = 0.0;
  double visibility = 0.0;
  double width_half = 0.0;
  double tail_width = 0.0;
};

namespace detail {

inline double median(std::vector<double> v) {
  const std::size_t n = v.size();
  std::sort(v.begin(), v.end());
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Delay at which the trace crosses `level` walking outward from `from` in
// direction `dir` (+1 or -1). `inside` holds on the feature side of the level.
// Falls back to the end of the axis if the trace never crosses.
template <typename Inside>
double crossing(const Trace& trace, std::size_t from, int dir, double level, Inside inside) {
  const auto& r = trace.rates;
  const auto& tau = trace.delays;
  std::size_t prev = from;
  while (true) {
    if ((dir < 0 && prev == 0) || (dir > 0 && prev + 1 == r.size())) return tau[prev];
    const std::size_t next = dir < 0 ? prev - 1 : prev + 1;
    if (!inside(r[next])) {
      const double frac = (r[prev] - level) / (r[prev] - r[next]);
      return tau[prev] + frac * (tau[next] - tau[prev]);
    }
    prev = next;
  }
}

}  // namespace detail

inline double trace_baseline(const Trace& trace, double outer_fraction = 0.1) {
  const std::size_t n = trace.rates.size();
  const std::size_t per_side =
      std::max<std::size_t>(1, static_cast<std::size_t>(outer_fraction * static_cast<double>(n)));
  std::vector<double> outer;
  outer.reserve(2 * per_side);
  for (std::size_t k = 0; k < per_side; ++k) {
    outer.push_back(trace.rates[k]);
    outer.push_back(trace.rates[n - 1 - k]);
  }
  return detail::median(std::move(outer));
}

inline TraceMetrics trace_metrics(const Trace& trace, const MetricOptions& opt = {}) {
  const auto& r = trace.rates;
  const std::size_t n = r.size();
  if (n < 3 || n != trace.delays.size()) {
    throw std::invalid_argument("trace_metrics: trace needs >= 3 samples matching its delay axis");
  }
  TraceMetrics m;
  m.baseline = trace_baseline(trace, opt.outer_fraction);

  const auto [lo, hi] = std::minmax_element(r.begin(), r.end());
  const double rise = *hi - m.baseline;
  const double fall = m.baseline - *lo;
  const double scale = std::max({std::abs(m.baseline), std::abs(*hi), std::abs(*lo)});
  if (std::max(rise, fall) <= opt.flat_tolerance * scale || !(std::max(rise, fall) > 0.0)) {
    m.featureless = true;
    m.extremum_value = m.baseline;
    return m;
  }
  m.is_peak = rise >= fall;
  const std::size_t i = static_cast<std::size_t>((m.is_peak ? hi : lo) - r.begin());

  // Three-point parabola through the extremal sample and its neighbours.
  double offset = 0.0;
  m.extremum_value = r[i];
  if (i > 0 && i + 1 < n) {
    const double curvature = r[i - 1] - 2.0 * r[i] + r[i + 1];
    if (curvature != 0.0) {
      offset = std::clamp(0.5 * (r[i - 1] - r[i + 1]) / curvature, -0.5, 0.5);
      m.extremum_value = r[i] - 0.25 * (r[i - 1] - r[i + 1]) * offset;
    }
  }
  m.extremum_delay = trace.delays[i] + offset * trace.delays.step();

  const double height = m.extremum_value - m.baseline;
  const double denom = m.is_peak ? m.extremum_value + m.baseline : m.baseline + m.extremum_value;
  m.visibility = denom != 0.0 ? std::abs(height) / denom : 0.0;

  auto width_at = [&](double fraction) {
    const double level = m.baseline + fraction * height;
    auto inside = [&](double v) { return m.is_peak ? v > level : v < level; };
    return detail::crossing(trace, i, +1, level, inside) -
           detail::crossing(trace, i, -1, level, inside);
  };
  m.width_half = width_at(0.5);
  m.tail_width = width_at(opt.tail_level);
  return m;
}

/// Affine normalization: baseline -> 0, extremum -> 1.
inline std::vector<double> normalized_rates(const Trace& trace, const MetricOptions& opt = {}) {
  const auto m = trace_metrics(trace, opt);
  if (m.featureless) {
    throw std::domain_error("normalized_rates: trace is featureless");
  }
  const double height = m.extremum_value - m.baseline;
  std::vector<double> out(trace.rates.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = (trace.rates[k] - m.baseline) / height;
  return out;
}

/// Largest pointwise gap between the affinely normalized traces.
inline double normalized_distance(const Trace& a, const Trace& b, const MetricOptions& opt = {}) {
  if (!(a.delays == b.delays)) {
    throw std::invalid_argument("normalized_distance: traces use different delay axes");
  }
  const auto na = normalized_rates(a, opt);
  const auto nb = normalized_rates(b, opt);
  double worst = 0.0;
  for (std::size_t k = 0; k < na.size(); ++k) worst = std::max(worst, std::abs(na[k] - nb[k]));
  return worst;
}

inline double tail_ratio(const Trace& a, const Trace& b, const MetricOptions& opt = {}) {
  const auto ma = trace_metrics(a, opt);
  const auto mb = trace_metrics(b, opt);
  if (ma.featureless || mb.featureless) {
    throw std::domain_error("tail_ratio: featureless trace");
  }
  return ma.tail_width / mb.tail_width;
}

}  // namespace etpa
