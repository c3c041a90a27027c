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

#include "etpa/pipeline.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>

namespace etpa {
namespace {

Scenario small(std::string_view preset) {
  auto sc = preset_scenario(preset);
  sc.grid_points = 65;
  sc.delay_points = 81;
  sc.delay_span_ps = 40.0;
  return sc;
}

double metric(const ScenarioRun& run, const std::string& key) {
  const auto it = std::find_if(run.metrics.begin(), run.metrics.end(),
                               [&](const auto& kv) { return kv.first == key; });
  if (it == run.metrics.end()) throw std::out_of_range("missing metric " + key);
  return it->second;
}

class PipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    root_ = std::filesystem::temp_directory_path() /
            ("etpa_pipeline_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(root_);
  }
  void TearDown() override { std::filesystem::remove_all(root_); }
  std::filesystem::path root_;
};

TEST_F(PipelineTest, WritesTracesPlotsAndMetrics) {
  const auto sc = small("fig3-asymmetric");
  const auto run = run_scenario(sc, root_);
  EXPECT_EQ(run.traces.size(), 9u);
  for (const char* f : {"traces/trace_noon_etpa.csv", "traces/trace_two_port_none.csv",
                        "plots/plot_single_port.svg", "metrics.txt"}) {
    EXPECT_TRUE(std::filesystem::exists(root_ / f)) << f;
  }
  EXPECT_EQ(run.written.size(), 9u + 3u + 1u);
  EXPECT_GT(run.survival.at("single"), run.survival.at("etpa"));
  EXPECT_EQ(run.survival.at("none"), 1.0);
  EXPECT_LT(metric(run, "distance.noon/none|noon/single"), metric(run, "distance.noon/none|noon/etpa"));
  EXPECT_EQ(metric(run, "trace.noon.none.is_peak"), 1.0);
  EXPECT_EQ(metric(run, "trace.two_port.none.is_peak"), 0.0);
  EXPECT_GT(metric(run, "tail_ratio.noon/etpa|single_port/single"), 1.0);
  const auto& t = run.trace(ConfigTag::noon, "etpa");
  EXPECT_EQ(t.label, "etpa");
  EXPECT_NE(t.provenance.find("two_photon"), std::string::npos);
}

TEST_F(PipelineTest, JsiPresetsWriteIntensityTables) {
  const auto run = run_scenario(small("fig2d"), root_);
  EXPECT_TRUE(std::filesystem::exists(root_ / "traces/jsi_none.csv"));
  EXPECT_TRUE(std::filesystem::exists(root_ / "traces/jsi_filtered.csv"));
  EXPECT_LT(run.survival.at("filtered"), run.survival.at("none"));
}

TEST_F(PipelineTest, RunIsDeterministic) {
  const auto sc = small("fig2c");
  const auto a = run_scenario(sc, root_ / "a");
  const auto b = run_scenario(sc, root_ / "b");
  EXPECT_EQ(detail::read_file(root_ / "a/metrics.txt"), detail::read_file(root_ / "b/metrics.txt"));
  EXPECT_EQ(detail::read_file(root_ / "a/plots/plot_noon.svg"), detail::read_file(root_ / "b/plots/plot_noon.svg"));
}

TEST_F(PipelineTest, InvalidScenarioIsRejectedBeforeWriting) {
  auto sc = small("fig2a");
  sc.configurations.clear();
  EXPECT_THROW(run_scenario(sc, root_), ScenarioError);
  EXPECT_FALSE(std::filesystem::exists(root_));
}

TEST(OracleCheck, EveryPresetAgreesOnCoarseGrid) {
  for (const auto& name : preset_names()) {
    const auto rows = oracle_check(preset_scenario(name), 17);
    ASSERT_FALSE(rows.empty());
    for (const auto& row : rows) {
      EXPECT_LE(row.relative_error, kOracleTolerance)
          << name << " " << to_string(row.config) << "/" << row.filter_set << " tau=" << row.tau;
    }
  }
}

TEST(OracleCheck, RelativeErrorUsesNormFloor) {
  EXPECT_EQ(oracle_relative_error(0.0, 0.0, 1.0), 0.0);
  EXPECT_NEAR(oracle_relative_error(0.0, 1e-8, 1.0), 1e-2, 1e-15);
  EXPECT_NEAR(oracle_relative_error(2.0, 2.2, 1.0), 0.1, 1e-12);
}

}  // namespace
}  // namespace etpa
