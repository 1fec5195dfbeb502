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

#ifndef DEGDIV_PIPELINE_H_
#define DEGDIV_PIPELINE_H_

#include <vector>

#include "degdiv/distributions.h"
#include "degdiv/error.h"
#include "degdiv/graph.h"
#include "degdiv/rng.h"
#include "degdiv/witness.h"

namespace degdiv {

inline constexpr int kDefaultAttempts = 16;

// U whose expected degrees in G(p) differ pairwise by at least `gap`.
struct SeparatedWitness {
  ProbVector p;
  VertexSet U;
  double gap = 1.0;
};

// Greedy independent set: take a vertex of minimum remaining degree (lowest
// index on ties), drop its closed neighbourhood, repeat. Size is at least
// n / (average degree + 1).
VertexSet turan_independent_set(const Graph& h);

// Samples S ~ G(p) `attempts` times, keeps U ∩ S vertices with pairwise
// distinct degrees in G[S] (one per degree class of the collision graph) and
// returns the largest witness found. Both the thinned set (every third vertex
// by expected degree) and the full U are tried on each sample. Vertices
// outside p.domain are never retained.
DistinctWitness separated_to_distinct(const Graph& g, const SeparatedWitness& w,
                                      int attempts, Rng& rng, int threads = 1);

// Samples p ~ dist and keeps an independent set of the graph on U joining
// pairs whose expected degrees are within 1. Best of `attempts`.
SeparatedWitness bad_to_separated(const Graph& g, const Distribution& dist,
                                  const VertexSet& u, int attempts, Rng& rng);

// Uniformly constant on S, trivial elsewhere. Throws InvalidWitness unless
// U ⊆ S has pairwise distinct degrees in G[S].
Distribution distinct_to_distribution(const Graph& g, const VertexSet& s,
                                      const VertexSet& u);

// 1/sqrt(56 (k+1) ln(k+1)).
double diverse_blend_width(int k);

// Blended distribution over all of V(G) for a set of k+1 vertices whose
// neighbourhoods pairwise differ in at least k^1.5 + k places. Throws
// NotDiverse when that fails and InvalidParams when |U| != k+1.
Distribution diverse_blended(const Graph& g, const VertexSet& u, int k);

struct BoundedDegreeResult {
  VertexSet U;
  Distribution dist;
  std::vector<int> anchors;         // u_1 .. u_{k+1} in placement order
  std::vector<VertexSet> controls;  // Y_1 .. Y_k, |Y_i| = 2k
};

class InsufficientDegreeError : public Error {
 public:
  InsufficientDegreeError(int placed, int wanted);
  int placed() const { return placed_; }

 private:
  int placed_;
};

// Greedy bounded-degree construction. Step i picks the lowest-index vertex
// u_i of degree >= 2k inside the surviving set, takes its first 2k surviving
// neighbours as Y_i, and removes Y_i together with every vertex having at
// least k/2 neighbours in Y_i. The last anchor is the lowest surviving
// vertex. Throws InsufficientDegreeError when a step finds no candidate.
BoundedDegreeResult bounded_degree_construct(const Graph& g, int k);

// Two-phase deletion giving Δ(H) <= 5 log2(n) δ(H): first strip vertices of
// degree >= d̄ log2 n for up to ceil(log2 n) rounds, then repeatedly drop a
// minimum-degree vertex while 5 d(v) < 2 d̄. Requires n >= 2.
InducedSubgraph regularize(const Graph& g);

// uv is an edge iff |N(u) △ N(v)| <= eps * min(d(u), d(v)).
Graph diversity_graph(const Graph& g, double eps);

}  // namespace degdiv

#endif  // DEGDIV_PIPELINE_H_
