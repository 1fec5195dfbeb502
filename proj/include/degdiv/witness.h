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

#ifndef DEGDIV_WITNESS_H_
#define DEGDIV_WITNESS_H_

#include <vector>

#include "degdiv/graph.h"

namespace degdiv {

// U ⊆ S whose members have pairwise distinct degrees in G[S].
struct DistinctWitness {
  VertexSet S;
  VertexSet U;
  int k() const { return U.size(); }
};

// Recounts degrees in G[S]; true iff U ⊆ S and the degrees of U are
// pairwise distinct.
bool verify_distinct(const Graph& g, const DistinctWitness& w);

// Throws InvalidWitness unless verify_distinct holds.
void require_distinct(const Graph& g, const DistinctWitness& w);

// One representative (lowest index) per degree value occurring in G[S].
DistinctWitness witness_from_set(const Graph& g, const VertexSet& s);

}  // namespace degdiv

#endif  // DEGDIV_WITNESS_H_
