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

#ifndef DEGDIV_SWEEP_H_
#define DEGDIV_SWEEP_H_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "degdiv/random_experiments.h"

namespace degdiv {

struct SweepConfig {
  int schema = 1;
  std::vector<int> n{4096};
  std::string p_grid = "geometric";  // "geometric" or "explicit"
  int p_points = 6;
  std::optional<double> p_min;       // geometric bounds; regime defaults
  std::optional<double> p_max;
  std::vector<double> p_values;      // explicit grid
  std::vector<double> p_exponents;   // explicit grid as p = n^e
  int seeds = 5;
  std::string regime = "dense";      // "dense" or "sparse"
  uint64_t base_seed = 1;
  bool timing = false;               // fill wall_ms (breaks byte-identical reruns)
  int exact_cap = 14;                // f_exact computed when n <= this
  int hom_cap = 60;                  // hom_bound_ok computed when n <= this
  int min_successes = 3;             // per (n, p) group, to enter the slope fit
  GnpPipelineConfig pipeline;
};

// Throws InvalidParams on unknown regimes, grids or schema versions.
SweepConfig sweep_config_from_json(const nlohmann::json& j);
nlohmann::json sweep_config_to_json(const SweepConfig& cfg);

// The p values of the grid for one n, in increasing order.
std::vector<double> sweep_p_values(const SweepConfig& cfg, int n);

// Seed of the (n, p index, seed index) cell.
uint64_t cell_seed(uint64_t base_seed, int n, int p_index, int seed_index);

struct ExperimentRecord {
  int n = 0;
  double p = 0.0;
  int p_index = 0;
  int seed_index = 0;
  uint64_t seed = 0;
  int f_lower = 1;
  std::optional<int> f_exact;
  int delta = 0;
  std::optional<bool> hom_bound_ok;
  std::string method;
  bool ok = false;
  int ceiling = 1;
  std::optional<double> wall_ms;
};

// Runs one cell: generates gnp(n, p, seed) and the lower-bound pipeline.
ExperimentRecord run_cell(const SweepConfig& cfg, int n, int p_index, double p,
                          int seed_index);

struct SweepGroup {
  int n = 0;
  double p = 0.0;
  int successes = 0;
  int cells = 0;
  double mean_f = 0.0;
  double mean_delta = 0.0;
};

struct SweepResult {
  std::vector<ExperimentRecord> records;  // sorted by (n, p index, seed index)
  std::vector<SweepGroup> groups;
  std::optional<double> slope;  // ln f_lower on ln(p n^2), dense regime
  int fitted_cells = 0;
  int ceiling_violations = 0;
};

// Least-squares slope over successful cells of groups with at least
// `min_successes` successes. Empty when fewer than two distinct x values.
std::optional<double> fit_slope(const std::vector<ExperimentRecord>& records,
                                int min_successes, int* used = nullptr);

// Runs every cell on `threads` workers. If `partial_csv` is set, each row is
// appended there as its cell finishes. The result does not depend on
// `threads`.
SweepResult run_sweep(const SweepConfig& cfg, int threads,
                      const std::string& partial_csv = "");

void write_sweep_header(std::ostream& out);
void write_sweep_row(std::ostream& out, const ExperimentRecord& r);
void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRecord>& records);

nlohmann::json sweep_summary_json(const SweepResult& result);

}  // namespace degdiv

#endif  // DEGDIV_SWEEP_H_
