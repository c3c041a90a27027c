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

#include "etpa/scenario.hpp"

#include <gtest/gtest.h>

#include <cctype>
#include <cmath>
#include <string>
#include <numbers>

namespace etpa {
namespace {

constexpr const char* kExample = R"(name = demo
frequency_quote = ordinary

[source]
pump_duration_ps = 5
eta_s_length_ps = 5
eta_i_length_ps = 10

[grid]
points = 129
half_width_ghz = auto

[filter etpa]   # two-photon notch
kind = two_photon
sigma_ghz = 20

[filter single]
kind = single_signal
sigma_ghz = 20
center_ghz = 5

[filter_set none]
filters =

[filter_set both]
filters = etpa, single

[interferometer]
configurations = noon, two_port
beamsplitter = lossless-5050

[delays]
points = 101
span_ps = 40

[output]
csv_dir = out/traces
svg_dir =
metrics = m.txt
jsi = true

[compare]
distance = noon/none, noon/both
tail_ratio = noon/both, two_port/none
)";

TEST(ScenarioParse, ReadsEveryField) {
  const auto sc = parse_scenario(kExample);
  EXPECT_EQ(sc.name, "demo");
  EXPECT_EQ(sc.source, (SourceParams{5.0, 5.0, 10.0, 0.0}));
  EXPECT_EQ(sc.grid_points, 129u);
  EXPECT_FALSE(sc.grid_half_width.has_value());
  ASSERT_EQ(sc.filters.size(), 2u);
  EXPECT_EQ(sc.filters[1].spec.kind, FilterKind::single_signal);
  ASSERT_EQ(sc.filter_sets.size(), 2u);
  EXPECT_TRUE(sc.filter_sets[0].filters.empty());
  EXPECT_EQ(sc.filter_sets[1].filters, (std::vector<std::string>{"etpa", "single"}));
  EXPECT_EQ(sc.configurations, (std::vector{ConfigTag::noon, ConfigTag::two_port}));
  EXPECT_TRUE(sc.beamsplitter.is_lossless_5050());
  EXPECT_EQ(sc.delay_points, 101u);
  EXPECT_EQ(sc.delay_span_ps, 40.0);
  EXPECT_EQ(sc.output.csv_dir, "out/traces");
  EXPECT_EQ(sc.output.svg_dir, "");
  EXPECT_TRUE(sc.output.jsi);
  ASSERT_EQ(sc.comparisons.size(), 2u);
  EXPECT_EQ(sc.comparisons[1].kind, ComparisonKind::tail_ratio);
  EXPECT_EQ(sc.comparisons[1].second, (TraceRef{ConfigTag::two_port, "none"}));
}

TEST(ScenarioParse, ConvertsQuotedFrequencies) {
  const auto ordinary = parse_scenario(kExample);
  EXPECT_NEAR(ordinary.filters[0].spec.sigma, 2.0 * std::numbers::pi * 0.02, 1e-15);
  EXPECT_NEAR(ordinary.filters[1].spec.center, 2.0 * std::numbers::pi * 0.005, 1e-15);

  std::string text = kExample;
  text.replace(text.find("ordinary"), 8, "angular");
  const auto angular = parse_scenario(text);
  EXPECT_NEAR(angular.filters[0].spec.sigma, 0.02, 1e-15);
}

TEST(ScenarioParse, ExplicitSplitterAndHalfWidth) {
  std::string text = kExample;
  text.replace(text.find("beamsplitter = lossless-5050"), 28, "t = 0, 0.6\nr = 0.6, 0");
  text.replace(text.find("half_width_ghz = auto"), 21, "half_width_ghz = 500");
  const auto sc = parse_scenario(text);
  EXPECT_EQ(sc.beamsplitter.t, Complex(0.0, 0.6));
  EXPECT_EQ(sc.beamsplitter.r, Complex(0.6, 0.0));
  EXPECT_NEAR(*sc.grid_half_width, 2.0 * std::numbers::pi * 0.5, 1e-15);
}

TEST(ScenarioParse, RoundTripsThroughText) {
  const auto sc = parse_scenario(kExample);
  const auto text = serialize_scenario(sc);
  const auto again = parse_scenario(text);
  EXPECT_EQ(serialize_scenario(again), text);
  EXPECT_EQ(again.filters, sc.filters);
  EXPECT_EQ(again.filter_sets, sc.filter_sets);
  EXPECT_EQ(again.comparisons, sc.comparisons);
  EXPECT_EQ(again.output, sc.output);
}

TEST(ScenarioParse, RoundTripsEveryPreset) {
  for (const auto& name : preset_names()) {
    const auto sc = preset_scenario(name);
    EXPECT_NO_THROW(sc.validate()) << name;
    const auto text = serialize_scenario(sc);
    EXPECT_EQ(serialize_scenario(parse_scenario(text)), text) << name;
  }
}

struct BadCase {
  const char* find;
  const char* replace;
  const char* field;
};

class ScenarioRejects : public ::testing::TestWithParam<BadCase> {};

TEST_P(ScenarioRejects, NamesTheOffendingField) {
  const auto& c = GetParam();
  std::string text = kExample;
  const auto at = text.find(c.find);
  ASSERT_NE(at, std::string::npos) << c.find;
  text.replace(at, std::string(c.find).size(), c.replace);
  try {
    parse_scenario(text);
    FAIL() << "accepted: " << c.replace;
  } catch (const ScenarioError& e) {
    EXPECT_EQ(e.field(), c.field) << e.what();
  }
}

INSTANTIATE_TEST_SUITE_P(
    Cases, ScenarioRejects,
    ::testing::Values(
        BadCase{"configurations = noon, two_port", "configurations =", "interferometer.configurations"},
        BadCase{"configurations = noon, two_port", "configurations = noon, hom", "interferometer.configurations"},
        BadCase{"points = 129", "points = 128", "grid.points"},
        BadCase{"points = 129", "points = many", "grid.points"},
        BadCase{"pump_duration_ps = 5", "pump_duration_ps = -5", "source"},
        BadCase{"kind = two_photon", "kind = triple", "filter.etpa.kind"},
        BadCase{"sigma_ghz = 20\n\n[filter single]", "sigma_ghz = 0\n\n[filter single]", "filter.etpa"},
        BadCase{"filters = etpa, single", "filters = etpa, missing", "filter_set.both.filters"},
        BadCase{"beamsplitter = lossless-5050", "t = 1, 0\nr = 1, 0", "interferometer.beamsplitter"},
        BadCase{"beamsplitter = lossless-5050", "t = 0, 0.5", "interferometer"},
        BadCase{"[delays]\npoints = 101", "[delays]\npoints = 100", "delays"},
        BadCase{"distance = noon/none, noon/both", "distance = single_port/none, noon/both", "compare[0]"},
        BadCase{"distance = noon/none, noon/both", "distance = noon/none", "compare.distance"},
        BadCase{"jsi = true", "jsi = perhaps", "output.jsi"},
        BadCase{"[output]", "[outputs]", "outputs"},
        BadCase{"span_ps = 40", "span = 40", "delays.span"}),
    [](const ::testing::TestParamInfo<BadCase>& info) {
      std::string name = std::to_string(info.index) + "_";
      for (const char* c = info.param.field; *c; ++c) name += std::isalnum(static_cast<unsigned char>(*c)) ? *c : '_';
      return name;
    });

TEST(ScenarioLoad, MissingFileIsIoError) {
  EXPECT_THROW(load_scenario("/nonexistent/scenario.ini"), IoError);
}

TEST(ScenarioPresets, Fig3HasAllComparisons) {
  const auto sc = preset_scenario("fig3-asymmetric");
  EXPECT_EQ(sc.source, (SourceParams{5.0, 5.0, 10.0, 0.0}));
  EXPECT_EQ(sc.filter_sets.size(), 3u);
  EXPECT_EQ(sc.comparisons.size(), 8u);
  EXPECT_THROW(preset_scenario("fig9"), ScenarioError);
}

}  // namespace
}  // namespace etpa
