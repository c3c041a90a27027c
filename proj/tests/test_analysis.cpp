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

#include "etpa/analysis.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "etpa/interferometry.hpp"
#include "test_support.hpp"

namespace etpa {
namespace {

Trace synthetic(const DelayAxis& axis, const std::function<double(double)>& f,
                ConfigTag config = ConfigTag::two_port) {
  std::vector<double> rates(axis.size());
  for (std::size_t k = 0; k < axis.size(); ++k) rates[k] = f(axis[k]);
  return Trace{axis, std::move(rates), config, "synthetic", ""};
}

double gaussian(double x, double center, double width) {
  const double u = (x - center) / width;
  return std::exp(-0.5 * u * u);
}

TEST(TraceMetricsTest, PerfectDipHasUnitVisibility) {
  const DelayAxis axis(401, 40.0);
  const auto trace = synthetic(axis, [](double t) { return 2.0 * (1.0 - gaussian(t, 0.0, 2.0)); });
  const auto m = trace_metrics(trace);
  EXPECT_FALSE(m.featureless);
  EXPECT_FALSE(m.is_peak);
  EXPECT_NEAR(m.baseline, 2.0, 1e-12);
  EXPECT_NEAR(m.extremum_value, 0.0, 1e-3);
  EXPECT_NEAR(m.visibility, 1.0, 1e-3);
  EXPECT_NEAR(m.extremum_delay, 0.0, 1e-12);
  const double fwhm = 2.0 * std::sqrt(2.0 * std::log(2.0)) * 2.0;
  EXPECT_NEAR(m.width_half, fwhm, 0.02);
  EXPECT_NEAR(m.tail_width, 2.0 * std::sqrt(2.0 * std::log(10.0)) * 2.0, 0.02);
}

TEST(TraceMetricsTest, PeakOfTwiceBaselineHasVisibilityOneThird) {
  const DelayAxis axis(401, 40.0);
  const auto trace = synthetic(axis, [](double t) { return 1.0 + gaussian(t, 0.0, 1.5); });
  const auto m = trace_metrics(trace);
  EXPECT_TRUE(m.is_peak);
  EXPECT_NEAR(m.extremum_value / m.baseline, 2.0, 1e-3);
  EXPECT_NEAR(m.visibility, 1.0 / 3.0, 1e-3);
}

TEST(TraceMetricsTest, LocatesOffCentreExtremumBetweenSamples) {
  const DelayAxis axis(201, 10.0);
  const auto trace = synthetic(axis, [](double t) { return 1.0 - 0.8 * gaussian(t, -2.53, 1.2); });
  const auto m = trace_metrics(trace);
  EXPECT_NEAR(m.extremum_delay, -2.53, 0.25 * axis.step());
}

TEST(TraceMetricsTest, FlatTraceIsFeatureless) {
  const DelayAxis axis(51, 5.0);
  const auto flat = synthetic(axis, [](double) { return 0.25; });
  EXPECT_TRUE(trace_metrics(flat).featureless);
  const auto almost = synthetic(axis, [](double t) { return 0.25 + 1e-12 * gaussian(t, 0.0, 1.0); });
  EXPECT_TRUE(trace_metrics(almost).featureless);
  const auto zero = synthetic(axis, [](double) { return 0.0; });
  EXPECT_TRUE(trace_metrics(zero).featureless);
  EXPECT_THROW(normalized_rates(flat), std::domain_error);
  EXPECT_THROW(tail_ratio(flat, flat), std::domain_error);
}

TEST(TraceMetricsTest, BaselineUsesOuterSamples) {
  const DelayAxis axis(101, 10.0);
  auto trace = synthetic(axis, [](double t) { return 3.0 - gaussian(t, 0.0, 1.0); });
  trace.rates[0] = 100.0;  // a single outlier moves the median very little
  EXPECT_NEAR(trace_baseline(trace), 3.0, 1e-9);
}

TEST(NormalizedDistanceTest, IdenticalAndAffineCopiesCoincide) {
  const DelayAxis axis(201, 20.0);
  const auto a = synthetic(axis, [](double t) { return 1.0 - 0.9 * gaussian(t, 0.0, 3.0); });
  const auto b = synthetic(axis, [](double t) { return 7.0 * (1.0 - 0.9 * gaussian(t, 0.0, 3.0)) + 0.5; });
  EXPECT_EQ(normalized_distance(a, a), 0.0);
  EXPECT_LE(normalized_distance(a, b), 1e-12);
}

TEST(NormalizedDistanceTest, DetectsShapeChange) {
  const DelayAxis axis(201, 20.0);
  const auto a = synthetic(axis, [](double t) { return 1.0 - gaussian(t, 0.0, 3.0); });
  const auto b = synthetic(axis, [](double t) { return 1.0 - gaussian(t, 0.0, 1.5); });
  EXPECT_GT(normalized_distance(a, b), 0.3);
}

TEST(NormalizedDistanceTest, RejectsMismatchedAxes) {
  const auto a = synthetic(DelayAxis(11, 5.0), [](double t) { return gaussian(t, 0, 1); });
  const auto b = synthetic(DelayAxis(13, 5.0), [](double t) { return gaussian(t, 0, 1); });
  EXPECT_THROW(normalized_distance(a, b), std::invalid_argument);
}

TEST(TailRatioTest, DilationScalesTailWidth) {
  const DelayAxis axis(801, 40.0);
  const auto narrow = synthetic(axis, [](double t) { return 1.0 + gaussian(t, 0.0, 1.0); });
  const auto wide = synthetic(axis, [](double t) { return 1.0 + gaussian(t, 0.0, 2.0); });
  EXPECT_NEAR(tail_ratio(wide, narrow), 2.0, 0.02);
  EXPECT_NEAR(tail_ratio(narrow, narrow), 1.0, 1e-15);
}

TEST(TraceMetricsTest, DelayReversalMirrorsExtremum) {
  const DelayAxis axis(201, 10.0);
  const auto f = [](double t) { return 1.0 - 0.7 * gaussian(t, 1.7, 1.1); };
  const auto forward = synthetic(axis, f);
  const auto reversed = synthetic(axis, [&](double t) { return f(-t); });
  const auto mf = trace_metrics(forward);
  const auto mr = trace_metrics(reversed);
  EXPECT_NEAR(mf.extremum_delay, -mr.extremum_delay, 1e-12);
  EXPECT_NEAR(mf.width_half, mr.width_half, 1e-12);
  EXPECT_NEAR(mf.visibility, mr.visibility, 1e-12);
}

TEST(TraceMetricsTest, StableUnderGridRefinement) {
  const auto src = testing::asymmetric_source();
  const double hw = default_half_width(src, std::vector{testing::kSigma20GHz});
  const DelayAxis delays(101, 20.0);
  const auto coarse = trace_metrics(scan_trace(ConfigTag::two_port, build_jsa(build_grid(129, hw), src), delays));
  const auto fine = trace_metrics(scan_trace(ConfigTag::two_port, build_jsa(build_grid(257, hw), src), delays));
  EXPECT_NEAR(coarse.visibility, fine.visibility, 1e-3);
  EXPECT_NEAR(coarse.extremum_delay, fine.extremum_delay, 1e-3);
  EXPECT_NEAR(coarse.width_half, fine.width_half, 1e-2);
}

}  // namespace
}  // namespace etpa
