// Copyright 2026 The degdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "degdiv/sweep.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "degdiv/error.h"

namespace degdiv {
namespace {

using nlohmann::json;

TEST(SweepConfig, ParsesAndRoundTrips) {
  const json j = json::parse(R"({"schema":1,"n":[512,1024],"p_grid":"geometric",
      "p_points":4,"seeds":2,"regime":"dense","base_seed":9,
      "pipeline":{"separate_attempts":8}})");
  const SweepConfig cfg = sweep_config_from_json(j);
  EXPECT_EQ(cfg.n, (std::vector<int>{512, 1024}));
  EXPECT_EQ(cfg.p_points, 4);
  EXPECT_EQ(cfg.seeds, 2);
  EXPECT_EQ(cfg.base_seed, 9u);
  EXPECT_EQ(cfg.pipeline.separate_attempts, 8);
  const SweepConfig back = sweep_config_from_json(sweep_config_to_json(cfg));
  EXPECT_EQ(sweep_config_to_json(back), sweep_config_to_json(cfg));

  EXPECT_EQ(sweep_config_from_json(json::parse(R"({"n":64})")).n, std::vector<int>{64});
}

TEST(SweepConfig, Rejects) {
  EXPECT_THROW(sweep_config_from_json(json::parse(R"({"bogus":1})")), Error);
  EXPECT_THROW(sweep_config_from_json(json::parse(R"({"schema":2})")), Error);
  EXPECT_THROW(sweep_config_from_json(json::parse(R"({"regime":"middle"})")), Error);
  EXPECT_THROW(sweep_config_from_json(json::parse(R"({"p_grid":"random"})")), Error);
  EXPECT_THROW(sweep_config_from_json(json::parse(R"({"seeds":0})")), Error);
}

TEST(SweepPValues, DenseDefaultGrid) {
  SweepConfig cfg;
  const auto ps = sweep_p_values(cfg, 4096);
  ASSERT_EQ(ps.size(), 6u);
  EXPECT_NEAR(ps.front(), 1.0 / 64, 1e-12);
  EXPECT_NEAR(ps.back(), 0.5, 1e-12);
  for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_NEAR(ps[i] / ps[i - 1], 2.0, 1e-9);
}

TEST(SweepPValues, ExplicitGrids) {
  SweepConfig cfg;
  cfg.p_grid = "explicit";
  cfg.p_values = {0.3, 0.1};
  EXPECT_EQ(sweep_p_values(cfg, 100), (std::vector<double>{0.1, 0.3}));
  cfg.p_values.clear();
  cfg.p_exponents = {-0.75};
  EXPECT_NEAR(sweep_p_values(cfg, 4096)[0], 1.0 / 512, 1e-12);
}

TEST(CellSeed, DistinctAndStable) {
  EXPECT_EQ(cell_seed(1, 4096, 2, 3), cell_seed(1, 4096, 2, 3));
  EXPECT_NE(cell_seed(1, 4096, 2, 3), cell_seed(1, 4096, 3, 2));
  EXPECT_NE(cell_seed(1, 4096, 2, 3), cell_seed(2, 4096, 2, 3));
}

ExperimentRecord rec(int n, double p, int p_index, int f, bool ok = true) {
  ExperimentRecord r;
  r.n = n;
  r.p = p;
  r.p_index = p_index;
  r.f_lower = f;
  r.ok = ok;
  return r;
}

TEST(FitSlope, RecoversPowerLaw) {
  // f = 2 (p n^2)^(1/3) exactly on a grid of p.
  std::vector<ExperimentRecord> rs;
  const std::vector<double> ps{0.01, 0.04, 0.16, 0.5};
  for (int i = 0; i < 4; ++i) {
    const int f = static_cast<int>(std::lround(2 * std::cbrt(ps[i] * 1e6)));
    for (int s = 0; s < 3; ++s) rs.push_back(rec(1000, ps[i], i, f));
  }
  int used = 0;
  const auto slope = fit_slope(rs, 3, &used);
  ASSERT_TRUE(slope.has_value());
  EXPECT_NEAR(*slope, 1.0 / 3, 0.01);
  EXPECT_EQ(used, 12);
}

TEST(FitSlope, SkipsThinGroups) {
  std::vector<ExperimentRecord> rs{rec(100, 0.1, 0, 5), rec(100, 0.1, 0, 5),
                                   rec(100, 0.1, 0, 5), rec(100, 0.4, 1, 8),
                                   rec(100, 0.4, 1, 8, false), rec(100, 0.4, 1, 8, false)};
  EXPECT_FALSE(fit_slope(rs, 3).has_value());
}

TEST(RunSweep, SmallDenseSweep) {
  SweepConfig cfg;
  cfg.n = {14, 512};
  cfg.p_points = 3;
  cfg.seeds = 2;
  const SweepResult a = run_sweep(cfg, 1);
  const SweepResult b = run_sweep(cfg, 3);
  ASSERT_EQ(a.records.size(), 12u);
  std::ostringstream ca, cb;
  write_sweep_csv(ca, a.records);
  write_sweep_csv(cb, b.records);
  EXPECT_EQ(ca.str(), cb.str());
  EXPECT_EQ(ca.str().substr(0, ca.str().find('\n')),
            "n,p,seed,f_lower,f_exact,delta,hom_bound_ok,method,wall_ms");
  EXPECT_EQ(a.ceiling_violations, 0);
  for (const auto& r : a.records) {
    EXPECT_GE(r.f_lower, 1);
    EXPECT_LE(r.f_lower, r.ceiling);
    EXPECT_FALSE(r.wall_ms.has_value());
    if (r.n <= cfg.exact_cap) {
      ASSERT_TRUE(r.f_exact.has_value());
      EXPECT_LE(r.f_lower, *r.f_exact);
      EXPECT_TRUE(r.hom_bound_ok.has_value());
    } else {
      EXPECT_FALSE(r.f_exact.has_value());
      EXPECT_FALSE(r.hom_bound_ok.has_value());
    }
  }
  const json s = sweep_summary_json(a);
  EXPECT_TRUE(s.contains("groups"));
}

TEST(RunSweep, TimingFillsWallClock) {
  SweepConfig cfg;
  cfg.n = {256};
  cfg.p_points = 1;
  cfg.seeds = 1;
  cfg.timing = true;
  const SweepResult r = run_sweep(cfg, 1);
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_TRUE(r.records[0].wall_ms.has_value());
}

TEST(RunSweep, DenseAverageGrowsWithP) {
  SweepConfig cfg;
  cfg.n = {2048};
  cfg.p_points = 4;
  cfg.seeds = 4;
  const SweepResult r = run_sweep(cfg, 1);
  std::vector<double> mean(4, 0.0), sq(4, 0.0);
  for (const auto& x : r.records) {
    mean[x.p_index] += x.f_lower / 4.0;
    sq[x.p_index] += x.f_lower * x.f_lower / 4.0;
  }
  for (int i = 1; i < 4; ++i) {
    const double var = std::max(0.0, sq[i] - mean[i] * mean[i]) * 4.0 / 3.0;
    const double se = std::sqrt(var / 4.0);
    EXPECT_GE(mean[i] + se, mean[i - 1]) << "p index " << i;
  }
}

}  // namespace
}  // namespace degdiv
