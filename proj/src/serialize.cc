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

#include "degdiv/serialize.h"

#include <set>
#include <string>
#include <type_traits>

#include "degdiv/error.h"

namespace degdiv {

using nlohmann::json;

namespace {

[[noreturn]] void bad_json(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace

json to_json(const VertexSet& s) { return s.members(); }

VertexSet vertex_set_from_json(const json& j, int n) {
  if (!j.is_array()) bad_json(ErrorCode::kInvalidSet, "vertex set must be an array");
  VertexSet s(n);
  for (const json& v : j) {
    if (!v.is_number_integer()) bad_json(ErrorCode::kInvalidSet, "vertex must be an integer");
    s.insert(v.get<int>());
  }
  return s;
}

json to_json(const Distribution& d) {
  return std::visit(
      [](const auto& k) -> json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Distribution::Trivial>) {
          return {{"type", "trivial"}, {"S", to_json(k.support)}};
        } else if constexpr (std::is_same_v<T, Distribution::UniformConstant>) {
          return {{"type", "uniform"}, {"S", to_json(k.support)}};
        } else if constexpr (std::is_same_v<T, Distribution::Blended>) {
          return {{"type", "blended"},
                  {"U", to_json(k.blend)},
                  {"S", to_json(k.support)},
                  {"beta", k.beta}};
        } else {
          json factors = json::array();
          for (const Distribution& f : k.factors) factors.push_back(to_json(f));
          return {{"type", "product"}, {"factors", factors}};
        }
      },
      d.kind());
}

Distribution distribution_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    bad_json(ErrorCode::kInvalidParams, "distribution needs a \"type\" string");
  }
  const std::string type = j["type"];
  auto support = [&] {
    return j.contains("S") ? vertex_set_from_json(j["S"], n) : VertexSet::full(n);
  };
  if (type == "trivial") return Distribution::trivial(support());
  if (type == "uniform") return Distribution::uniform_constant(support());
  if (type == "blended") {
    if (!j.contains("U") || !j.contains("beta") || !j["beta"].is_number()) {
      bad_json(ErrorCode::kInvalidParams, "blended needs \"U\" and \"beta\"");
    }
    return Distribution::blended(vertex_set_from_json(j["U"], n), support(),
                                 j["beta"].get<double>());
  }
  if (type == "product") {
    if (!j.contains("factors") || !j["factors"].is_array()) {
      bad_json(ErrorCode::kInvalidParams, "product needs a \"factors\" array");
    }
    std::vector<Distribution> factors;
    for (const json& f : j["factors"]) factors.push_back(distribution_from_json(f, n));
    return Distribution::product(std::move(factors));
  }
  bad_json(ErrorCode::kInvalidParams, "unknown distribution type '" + type + "'");
}

json to_json(const DistinctWitness& w) {
  return {{"k", w.k()}, {"S", to_json(w.S)}, {"U", to_json(w.U)}};
}

DistinctWitness witness_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("S") || !j.contains("U")) {
    bad_json(ErrorCode::kInvalidWitness, "witness needs \"S\" and \"U\"");
  }
  return DistinctWitness{vertex_set_from_json(j["S"], n), vertex_set_from_json(j["U"], n)};
}

json to_json(const BadEstimate& e) {
  return {{"value", e.value}, {"trials", e.trials}, {"std_err", e.std_err}};
}

json to_json(const PipelineConfig& c) {
  return {{"schema", c.schema},
          {"diverse_coeff", c.diverse_coeff},
          {"mid_degree_coeff", c.mid_degree_coeff},
          {"cluster_factor", c.cluster_factor},
          {"high_split", c.high_split},
          {"low_split", c.low_split},
          {"leaf_k", c.leaf_k},
          {"max_depth", c.max_depth},
          {"bad_slack", c.bad_slack},
          {"bad_trials", c.bad_trials},
          {"window", c.window},
          {"dense_branch", c.dense_branch},
          {"dense_threshold", c.dense_threshold},
          {"epsilon", c.epsilon},
          {"s1_factor", c.s1_factor},
          {"w_retries", c.w_retries},
          {"control_set_coeff", c.control_set_coeff},
          {"case1_keep_coeff", c.case1_keep_coeff},
          {"separate_attempts", c.separate_attempts},
          {"distinct_attempts", c.distinct_attempts},
          {"k_ladder", c.k_ladder},
          {"greedy_fallback", c.greedy_fallback},
          {"greedy_restarts", c.greedy_restarts}};
}

PipelineConfig pipeline_config_from_json(const json& j) {
  if (!j.is_object()) bad_json(ErrorCode::kInvalidParams, "config must be an object");
  const std::string preset = j.value("preset", std::string("desk"));
  if (preset != "desk" && preset != "asymptotic") {
    bad_json(ErrorCode::kInvalidParams, "preset must be desk or asymptotic");
  }
  PipelineConfig c =
      preset == "asymptotic" ? PipelineConfig::asymptotic() : PipelineConfig::desk();
  const json defaults = to_json(c);
  for (const auto& [key, value] : j.items()) {
    if (key != "preset" && !defaults.contains(key)) {
      bad_json(ErrorCode::kInvalidParams, "unknown config key '" + key + "'");
    }
  }
  json merged = defaults;
  for (const auto& [key, value] : j.items()) {
    if (key != "preset") merged[key] = value;
  }
  try {
    c.schema = merged["schema"];
    if (c.schema != 1) {
      bad_json(ErrorCode::kInvalidParams, "unsupported schema " + std::to_string(c.schema));
    }
    c.diverse_coeff = merged["diverse_coeff"];
    c.mid_degree_coeff = merged["mid_degree_coeff"];
    c.cluster_factor = merged["cluster_factor"];
    c.high_split = merged["high_split"];
    c.low_split = merged["low_split"];
    c.leaf_k = merged["leaf_k"];
    c.max_depth = merged["max_depth"];
    c.bad_slack = merged["bad_slack"];
    c.bad_trials = merged["bad_trials"];
    c.window = merged["window"];
    c.dense_branch = merged["dense_branch"];
    c.dense_threshold = merged["dense_threshold"];
    c.epsilon = merged["epsilon"];
    c.s1_factor = merged["s1_factor"];
    c.w_retries = merged["w_retries"];
    c.control_set_coeff = merged["control_set_coeff"];
    c.case1_keep_coeff = merged["case1_keep_coeff"];
    c.separate_attempts = merged["separate_attempts"];
    c.distinct_attempts = merged["distinct_attempts"];
    c.k_ladder = merged["k_ladder"].get<std::vector<double>>();
    c.greedy_fallback = merged["greedy_fallback"];
    c.greedy_restarts = merged["greedy_restarts"];
  } catch (const json::exception& e) {
    bad_json(ErrorCode::kInvalidParams, std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace degdiv
