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

#ifndef DEGDIV_SERIALIZE_H_
#define DEGDIV_SERIALIZE_H_

#include "json.hpp"

#include "degdiv/construct.h"
#include "degdiv/distributions.h"
#include "degdiv/graph.h"
#include "degdiv/witness.h"

namespace degdiv {

nlohmann::json to_json(const VertexSet& s);
// Throws InvalidSet on indices outside [0, n) or non-integer entries.
VertexSet vertex_set_from_json(const nlohmann::json& j, int n);

// {"type":"trivial"|"uniform"|"blended"|"product", ...}. "S" defaults to all
// vertices; blended also takes "U" and "beta"; product takes "factors".
nlohmann::json to_json(const Distribution& d);
Distribution distribution_from_json(const nlohmann::json& j, int n);

// {"k":..., "S":[...], "U":[...]}.
nlohmann::json to_json(const DistinctWitness& w);
DistinctWitness witness_from_json(const nlohmann::json& j, int n);

nlohmann::json to_json(const BadEstimate& e);

nlohmann::json to_json(const PipelineConfig& cfg);
// Starts from desk() (or asymptotic() when "preset":"asymptotic") and
// overrides the keys present. Throws InvalidParams on unknown keys or a
// wrong schema.
PipelineConfig pipeline_config_from_json(const nlohmann::json& j);

}  // namespace degdiv

#endif  // DEGDIV_SERIALIZE_H_
