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

#include "cli.h"

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "degdiv/construct.h"
#include "degdiv/error.h"
#include "degdiv/exact.h"
#include "degdiv/generators.h"
#include "degdiv/graph_io.h"
#include "degdiv/parallel.h"
#include "degdiv/serialize.h"
#include "degdiv/sweep.h"
#include "degdiv/version.h"

namespace degdiv {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string utc_now() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

uint64_t fresh_seed() {
  std::random_device rd;
  return (static_cast<uint64_t>(rd()) << 32) ^ rd();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    throw Error(ErrorCode::kIo, "cannot write " + path);
  }
}

json parse_json(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kInvalidParams, what + ": " + e.what());
  }
}

// Inline JSON when the argument starts with '{' or '[', otherwise a file.
json json_arg(const std::string& arg, const std::string& what) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) {
    return parse_json(arg, what);
  }
  return parse_json(read_file(arg), what);
}

struct RunContext {
  std::string command;
  std::vector<std::string> args;
  std::string started = utc_now();
};

void write_manifest(const RunContext& ctx, const std::string& path,
                    const json& config, std::optional<uint64_t> seed,
                    const std::vector<std::string>& outputs) {
  json m = {{"command", ctx.command},
            {"args", ctx.args},
            {"config", config},
            {"version", kVersion},
            {"started", ctx.started},
            {"finished", utc_now()},
            {"outputs", outputs}};
  m["seed"] = seed ? json(*seed) : json(nullptr);
  write_file(path, m.dump(2) + "\n");
}

// Prints `result` and, with --out, also stores it beside a manifest.
void emit(const RunContext& ctx, std::ostream& out, const json& result,
          const std::string& out_path, const json& config,
          std::optional<uint64_t> seed) {
  out << result.dump() << "\n";
  if (out_path.empty()) return;
  write_file(out_path, result.dump(2) + "\n");
  write_manifest(ctx, out_path + ".manifest.json", config, seed, {out_path});
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kIo:
      return kExitIo;
    case ErrorCode::kTooLarge:
      return kExitTooLarge;
    case ErrorCode::kConstructionFailed:
    case ErrorCode::kInvalidWitness:
    case ErrorCode::kNotDiverse:
    case ErrorCode::kInsufficientDegree:
    case ErrorCode::kNotConvenient:
    case ErrorCode::kSeparationFailed:
    case ErrorCode::kRealizationFailed:
    case ErrorCode::kNotPrivate:
      return kExitFailed;
    default:
      return kExitUsage;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distinct degrees in induced subgraphs: generators, oracles, constructions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (default: DEGDIV_THREADS or all cores)");

  // gen
  auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
  std::string family, out_path;
  int n = 0, k = 0, b = 0, inner = 0;
  double p = -1.0;
  std::optional<uint64_t> seed;
  gen->add_option("--family", family, "turan | iterated-turan | gnp")
      ->required()
      ->check(CLI::IsMember({"turan", "iterated-turan", "gnp"}));
  gen->add_option("--n", n, "vertex count")->required();
  gen->add_option("--k", k, "part count (turan)");
  gen->add_option("--b", b, "block count (iterated-turan)");
  gen->add_option("--inner", inner, "inner part count override (iterated-turan)");
  gen->add_option("--p", p, "edge probability (gnp)");
  gen->add_option("--seed", seed, "seed (gnp)");
  gen->add_option("--out", out_path, "output path (default: stdout)");

  // exact
  auto* exact = app.add_subcommand("exact", "exact f(G) and hom(G) by brute force");
  std::string graph_path, what = "both";
  exact->add_option("--graph", graph_path, "edge-list file")->required();
  exact->add_option("--what", what, "f | hom | both")
      ->check(CLI::IsMember({"f", "hom", "both"}));
  exact->add_option("--out", out_path, "also write the JSON here");

  // find
  auto* find = app.add_subcommand("find", "search for many distinct degrees");
  std::string config_path;
  find->add_option("--graph", graph_path, "edge-list file")->required();
  find->add_option("--seed", seed, "seed (default: generated)");
  find->add_option("--config", config_path, "pipeline config JSON");
  find->add_option("--out", out_path, "also write the JSON here");

  // bad
  auto* bad = app.add_subcommand("bad", "estimate bad(u, v) under a distribution");
  std::string dist_arg, set_arg;
  int u = -1, v = -1, trials = kDefaultTrials;
  double half_width = kDefaultHalfWidth;
  bad->add_option("--graph", graph_path, "edge-list file")->required();
  bad->add_option("--dist", dist_arg, "distribution JSON or file")->required();
  bad->add_option("--u", u, "first vertex")->required();
  bad->add_option("--v", v, "second vertex")->required();
  bad->add_option("--trials", trials, "Monte-Carlo samples");
  bad->add_option("--set", set_arg, "S as a JSON array (default: all vertices)");
  bad->add_option("--half-width", half_width, "window half-width");
  bad->add_option("--seed", seed, "seed (default: generated)");
  bad->add_option("--out", out_path, "also write the JSON here");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run a G(n,p) sweep");
  std::string out_dir;
  experiment->add_option("--config", config_path, "sweep config JSON")->required();
  experiment->add_option("--out", out_dir, "output directory")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "re-check a witness against a graph");
  std::string witness_path;
  verify->add_option("--graph", graph_path, "edge-list file")->required();
  verify->add_option("--witness", witness_path, "witness JSON (S and U)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunContext ctx;
  for (int i = 1; i < argc; ++i) ctx.args.emplace_back(argv[i]);
  const int workers = resolve_threads(threads);

  try {
    if (gen->parsed()) {
      ctx.command = "gen";
      Graph g;
      json cfg = {{"family", family}, {"n", n}};
      if (family == "turan") {
        if (gen->count("--k") == 0) throw Error(ErrorCode::kInvalidParams, "turan needs --k");
        g = turan(n, k);
        cfg["k"] = k;
      } else if (family == "iterated-turan") {
        if (gen->count("--b") == 0) {
          throw Error(ErrorCode::kInvalidParams, "iterated-turan needs --b");
        }
        g = iterated_turan(n, b, inner > 0 ? std::optional<int>(inner) : std::nullopt);
        cfg["b"] = b;
        if (inner > 0) cfg["inner"] = inner;
      } else {
        if (gen->count("--p") == 0) throw Error(ErrorCode::kInvalidParams, "gnp needs --p");
        if (!seed) seed = fresh_seed();
        g = gnp(n, p, *seed);
        cfg["p"] = p;
      }
      std::ostringstream summary;
      summary << g.n() << " " << g.edge_count() << " " << family << "\n";
      if (out_path.empty()) {
        write_edge_list(out, g);
        err << summary.str();
      } else {
        write_edge_list_file(out_path, g);
        write_manifest(ctx, out_path + ".manifest.json", cfg, seed, {out_path});
        out << summary.str();
      }
      return kExitOk;
    }

    if (exact->parsed()) {
      ctx.command = "exact";
      const Graph g = read_edge_list_file(graph_path);
      json result = {{"n", g.n()}};
      if (what != "hom") {
        DistinctWitness w = exact_f(g, kDefaultFCap, workers);
        result["f"] = w.k();
        result["f_witness"] = to_json(w);
      }
      if (what != "f") {
        HomResult h = exact_hom(g);
        result["hom"] = h.value;
        result["hom_witness"] = to_json(h.witness);
        result["hom_kind"] = h.is_clique ? "clique" : "independent";
      }
      emit(ctx, out, result, out_path, {{"graph", graph_path}, {"what", what}}, std::nullopt);
      return kExitOk;
    }

    if (find->parsed()) {
      ctx.command = "find";
      const Graph g = read_edge_list_file(graph_path);
      PipelineConfig cfg = config_path.empty()
                               ? PipelineConfig::desk()
                               : pipeline_config_from_json(json_arg(config_path, "config"));
      if (!seed) seed = fresh_seed();
      Rng rng(*seed);
      FindResult r = find_distinct_degrees(g, cfg, rng, workers);
      json result = to_json(r.witness);
      result["method"] = r.method;
      result["seed"] = *seed;
      result["ladder_k"] = r.k;
      emit(ctx, out, result, out_path, {{"graph", graph_path}, {"pipeline", to_json(cfg)}},
           seed);
      return kExitOk;
    }

    if (bad->parsed()) {
      ctx.command = "bad";
      const Graph g = read_edge_list_file(graph_path);
      const json spec = json_arg(dist_arg, "distribution");
      Distribution dist =
          Distribution::with_trivial_rest(distribution_from_json(spec, g.n()));
      const VertexSet s = set_arg.empty() ? VertexSet::full(g.n())
                                          : vertex_set_from_json(json_arg(set_arg, "set"), g.n());
      if (u < 0 || u >= g.n() || v < 0 || v >= g.n()) {
        throw Error(ErrorCode::kInvalidPair, "vertex out of range");
      }
      if (!seed) seed = fresh_seed();
      Rng rng(*seed);
      BadEstimate e = estimate_bad(dist, g, u, v, s, trials, rng, half_width);
      json result = to_json(e);
      result["u"] = u;
      result["v"] = v;
      result["seed"] = *seed;
      emit(ctx, out, result, out_path,
           {{"graph", graph_path}, {"dist", spec}, {"trials", trials},
            {"half_width", half_width}},
           seed);
      return kExitOk;
    }

    if (experiment->parsed()) {
      ctx.command = "experiment";
      SweepConfig cfg = sweep_config_from_json(json_arg(config_path, "sweep config"));
      std::error_code ec;
      fs::create_directories(out_dir, ec);
      if (ec) throw Error(ErrorCode::kIo, "cannot create " + out_dir);
      const std::string partial = (fs::path(out_dir) / "sweep.partial.csv").string();
      const std::string csv = (fs::path(out_dir) / "sweep.csv").string();
      const std::string summary = (fs::path(out_dir) / "summary.json").string();
      SweepResult res = run_sweep(cfg, workers, partial);
      std::ostringstream table;
      write_sweep_csv(table, res.records);
      write_file(csv, table.str());
      const json sj = sweep_summary_json(res);
      write_file(summary, sj.dump(2) + "\n");
      write_manifest(ctx, (fs::path(out_dir) / "manifest.json").string(),
                     sweep_config_to_json(cfg), cfg.base_seed, {csv, summary});
      fs::remove(partial, ec);
      out << sj.dump() << "\n";
      return kExitOk;
    }

    if (verify->parsed()) {
      ctx.command = "verify";
      const Graph g = read_edge_list_file(graph_path);
      DistinctWitness w = witness_from_json(json_arg(witness_path, "witness"), g.n());
      const bool valid = verify_distinct(g, w);
      out << json{{"valid", valid}, {"k", w.k()}}.dump() << "\n";
      return valid ? kExitOk : kExitFailed;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace degdiv
