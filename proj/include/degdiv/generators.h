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

#ifndef DEGDIV_GENERATORS_H_
#define DEGDIV_GENERATORS_H_

#include <cstdint>
#include <optional>

#include "degdiv/graph.h"

namespace degdiv {

// Complete balanced k-partite graph: part sizes differ by at most one, with
// the larger parts first and vertices numbered part by part.
Graph turan(int n, int k);

// Part index of v in turan(n, k).
int turan_part(int n, int k, int v);

// `blocks` blocks of n/blocks vertices; each block is the complement of a
// Turán graph with `inner_parts` parts, and every cross-block pair is an
// edge. inner_parts defaults to sqrt(n). Rejects splits that are not exact.
Graph iterated_turan(int n, int blocks, std::optional<int> inner_parts = {});

// Erdős–Rényi G(n, p). Edge {u, v} (u < v) is present iff
// to_unit(hash3(seed, u, v)) < p, so the graph is a pure function of
// (n, p, seed).
Graph gnp(int n, double p, uint64_t seed);

// Graph whose vertex i has neighbours {0, ..., i-1} exactly when bit i of
// `dominating` is set (vertex 0 bit ignored). Threshold graphs.
Graph threshold_graph(int n, uint64_t dominating);

}  // namespace degdiv

#endif  // DEGDIV_GENERATORS_H_
