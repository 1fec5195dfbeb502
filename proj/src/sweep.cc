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

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <tuple>

#include "degdiv/error.h"
#include "degdiv/exact.h"
#include "degdiv/generators.h"
#include "degdiv/parallel.h"

namespace degdiv {

namespace {

void bad_config(const std::string& what) {
  throw Error(ErrorCode::kInvalidParams, "sweep config: " + what);
}

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace

SweepConfig sweep_config_from_json(const nlohmann::json& j) {
  if (!j.is_object()) bad_config("expected a JSON object");
  static const std::set<std::string> known = {
      "schema", "n", "p_grid", "p_points", "p_min", "p_max", "p_values",
      "p_exponents", "seeds", "regime", "base_seed", "timing", "exact_cap",
      "hom_cap", "min_successes", "pipeline"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) bad_config("unknown key '" + key + "'");
  }
  SweepConfig c;
  try {
    c.schema = j.value("schema", 1);
    if (c.schema != 1) bad_config("unsupported schema " + std::to_string(c.schema));
    if (j.contains("n")) {
      c.n = j["n"].is_array() ? j["n"].get<std::vector<int>>()
                              : std::vector<int>{j["n"].get<int>()};
    }
    c.p_values = j.value("p_values", std::vector<double>{});
    c.p_exponents = j.value("p_exponents", std::vector<double>{});
    const bool has_explicit = !c.p_values.empty() || !c.p_exponents.empty();
    c.p_grid = j.value("p_grid", std::string(has_explicit ? "explicit" : "geometric"));
    c.p_points = j.value("p_points", 6);
    if (j.contains("p_min")) c.p_min = j["p_min"].get<double>();
    if (j.contains("p_max")) c.p_max = j["p_max"].get<double>();
    c.seeds = j.value("seeds", 5);
    c.regime = j.value("regime", std::string("dense"));
    c.base_seed = j.value("base_seed", uint64_t{1});
    c.timing = j.value("timing", false);
    c.exact_cap = j.value("exact_cap", c.exact_cap);
    c.hom_cap = j.value("hom_cap", c.hom_cap);
    c.min_successes = j.value("min_successes", c.min_successes);
    if (j.contains("pipeline")) {
      const auto& p = j["pipeline"];
      c.pipeline.target_divisor = p.value("target_divisor", c.pipeline.target_divisor);
      c.pipeline.separate_attempts =
          p.value("separate_attempts", c.pipeline.separate_attempts);
      c.pipeline.realize_attempts =
          p.value("realize_attempts", c.pipeline.realize_attempts);
      c.pipeline.private_degree = p.value("private_degree", c.pipeline.private_degree);
    }
  } catch (const nlohmann::json::exception& e) {
    bad_config(e.what());
  }
  if (c.regime != "dense" && c.regime != "sparse") bad_config("regime must be dense or sparse");
  if (c.p_grid != "geometric" && c.p_grid != "explicit") {
    bad_config("p_grid must be geometric or explicit");
  }
  if (c.p_grid == "explicit" && c.p_values.empty() && c.p_exponents.empty()) {
    bad_config("explicit grid needs p_values or p_exponents");
  }
  if (c.n.empty() || c.seeds < 1 || c.p_points < 1) bad_config("empty grid");
  for (int n : c.n) {
    if (n < 2) bad_config("n must be at least 2");
  }
  return c;
}

nlohmann::json sweep_config_to_json(const SweepConfig& c) {
  nlohmann::json j = {
      {"schema", c.schema},       {"n", c.n},
      {"p_grid", c.p_grid},       {"p_points", c.p_points},
      {"seeds", c.seeds},         {"regime", c.regime},
      {"base_seed", c.base_seed}, {"timing", c.timing},
      {"exact_cap", c.exact_cap}, {"hom_cap", c.hom_cap},
      {"min_successes", c.min_successes},
      {"pipeline",
       {{"target_divisor", c.pipeline.target_divisor},
        {"separate_attempts", c.pipeline.separate_attempts},
        {"realize_attempts", c.pipeline.realize_attempts},
        {"private_degree", c.pipeline.private_degree}}}};
  if (c.p_min) j["p_min"] = *c.p_min;
  if (c.p_max) j["p_max"] = *c.p_max;
  if (!c.p_values.empty()) j["p_values"] = c.p_values;
  if (!c.p_exponents.empty()) j["p_exponents"] = c.p_exponents;
  return j;
}

std::vector<double> sweep_p_values(const SweepConfig& c, int n) {
  std::vector<double> out;
  if (c.p_grid == "explicit") {
    out = c.p_values;
    for (double e : c.p_exponents) out.push_back(std::pow(static_cast<double>(n), e));
  } else {
    const double dn = n;
    const bool dense = c.regime == "dense";
    const double lo = c.p_min.value_or(dense ? 1.0 / std::sqrt(dn) : 2.0 / dn);
    const double hi = c.p_max.value_or(dense ? 0.5 : std::pow(dn, -0.75));
    if (!(lo > 0 && hi >= lo)) bad_config("geometric grid needs 0 < p_min <= p_max");
    for (int i = 0; i < c.p_points; ++i) {
      const double t = c.p_points == 1 ? 0.0 : static_cast<double>(i) / (c.p_points - 1);
      out.push_back(lo * std::pow(hi / lo, t));
    }
  }
  std::sort(out.begin(), out.end());
  for (double p : out) {
    if (!(p >= 0.0 && p <= 1.0)) bad_config("p outside [0, 1]");
  }
  return out;
}

uint64_t cell_seed(uint64_t base_seed, int n, int p_index, int seed_index) {
  return mix64(hash3(base_seed, static_cast<uint64_t>(n), static_cast<uint64_t>(p_index)) ^
               mix64(static_cast<uint64_t>(seed_index) + kGolden));
}

ExperimentRecord run_cell(const SweepConfig& cfg, int n, int p_index, double p,
                          int seed_index) {
  const auto start = std::chrono::steady_clock::now();
  ExperimentRecord r;
  r.n = n;
  r.p = p;
  r.p_index = p_index;
  r.seed_index = seed_index;
  r.seed = cell_seed(cfg.base_seed, n, p_index, seed_index);
  const Graph g = gnp(n, p, r.seed);
  r.delta = degree_stats(g).max_degree;
  Rng rng = Rng(r.seed).split(0x5eed);
  GnpOutcome out = run_gnp_pipeline(g, p, cfg.regime == "sparse", cfg.pipeline, rng);
  r.f_lower = std::max(1, out.witness.k());
  r.method = out.method;
  r.ok = out.ok;
  r.ceiling = upper_bound_ceiling(n, p);
  if (n <= cfg.exact_cap && n <= kDefaultFCap) r.f_exact = exact_f(g).k();
  if (n <= cfg.hom_cap && n <= kDefaultHomCap) {
    const double bound = p > 0 ? gnp_constants::kHomFactor * std::log(double(n)) / p
                               : static_cast<double>(n);
    r.hom_bound_ok = exact_hom(g).value <= bound;
  }
  if (cfg.timing) {
    r.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  }
  return r;
}

std::optional<double> fit_slope(const std::vector<ExperimentRecord>& records,
                                int min_successes, int* used) {
  std::map<std::pair<int, int>, int> wins;
  for (const auto& r : records) {
    if (r.ok) ++wins[{r.n, r.p_index}];
  }
  std::vector<double> xs, ys;
  for (const auto& r : records) {
    if (!r.ok || wins[{r.n, r.p_index}] < min_successes) continue;
    xs.push_back(std::log(r.p * r.n * static_cast<double>(r.n)));
    ys.push_back(std::log(static_cast<double>(r.f_lower)));
  }
  if (used) *used = static_cast<int>(xs.size());
  if (xs.size() < 2) return std::nullopt;
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / xs.size();
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / ys.size();
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx <= 1e-12) return std::nullopt;
  return sxy / sxx;
}

void write_sweep_header(std::ostream& out) {
  out << "n,p,seed,f_lower,f_exact,delta,hom_bound_ok,method,wall_ms\n";
}

void write_sweep_row(std::ostream& out, const ExperimentRecord& r) {
  out << r.n << ',' << fmt_double(r.p) << ',' << r.seed << ',' << r.f_lower << ',';
  if (r.f_exact) out << *r.f_exact;
  out << ',' << r.delta << ',';
  if (r.hom_bound_ok) out << (*r.hom_bound_ok ? "true" : "false");
  out << ',' << r.method << ',';
  if (r.wall_ms) out << fmt_double(*r.wall_ms);
  out << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<ExperimentRecord>& records) {
  write_sweep_header(out);
  for (const auto& r : records) write_sweep_row(out, r);
}

SweepResult run_sweep(const SweepConfig& cfg, int threads, const std::string& partial_csv) {
  struct Cell {
    int n, p_index, seed_index;
    double p;
  };
  std::vector<Cell> cells;
  for (int n : cfg.n) {
    const std::vector<double> ps = sweep_p_values(cfg, n);
    for (int pi = 0; pi < static_cast<int>(ps.size()); ++pi) {
      for (int s = 0; s < cfg.seeds; ++s) cells.push_back({n, pi, s, ps[pi]});
    }
  }
  std::ofstream partial;
  if (!partial_csv.empty()) {
    partial.open(partial_csv, std::ios::trunc);
    if (!partial) throw Error(ErrorCode::kIo, "cannot write " + partial_csv);
    write_sweep_header(partial);
    partial.flush();
  }
  std::mutex mu;
  SweepResult res;
  res.records.resize(cells.size());
  parallel_for(cells.size(), resolve_threads(threads), [&](std::size_t i) {
    const Cell& c = cells[i];
    res.records[i] = run_cell(cfg, c.n, c.p_index, c.p, c.seed_index);
    if (partial.is_open()) {
      std::lock_guard<std::mutex> lock(mu);
      write_sweep_row(partial, res.records[i]);
      partial.flush();
    }
  });
  std::stable_sort(res.records.begin(), res.records.end(),
                   [](const ExperimentRecord& a, const ExperimentRecord& b) {
                     return std::tie(a.n, a.p_index, a.seed_index) <
                            std::tie(b.n, b.p_index, b.seed_index);
                   });
  for (const auto& r : res.records) {
    if (res.groups.empty() || res.groups.back().n != r.n || res.groups.back().p != r.p) {
      res.groups.push_back(SweepGroup{r.n, r.p, 0, 0, 0.0, 0.0});
    }
    SweepGroup& g = res.groups.back();
    ++g.cells;
    if (r.ok) ++g.successes;
    g.mean_f += r.f_lower;
    g.mean_delta += r.delta;
    if (r.f_lower > r.ceiling) ++res.ceiling_violations;
  }
  for (auto& g : res.groups) {
    g.mean_f /= g.cells;
    g.mean_delta /= g.cells;
  }
  if (cfg.regime == "dense") {
    res.slope = fit_slope(res.records, cfg.min_successes, &res.fitted_cells);
  }
  return res;
}

nlohmann::json sweep_summary_json(const SweepResult& res) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : res.groups) {
    groups.push_back({{"n", g.n},
                      {"p", g.p},
                      {"cells", g.cells},
                      {"successes", g.successes},
                      {"mean_f_lower", g.mean_f},
                      {"mean_delta", g.mean_delta}});
  }
  nlohmann::json j = {{"cells", res.records.size()},
                      {"fitted_cells", res.fitted_cells},
                      {"ceiling_violations", res.ceiling_violations},
                      {"groups", groups}};
  j["slope"] = res.slope ? nlohmann::json(*res.slope) : nlohmann::json(nullptr);
  return j;
}

}  // namespace degdiv
