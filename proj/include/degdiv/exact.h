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

#ifndef DEGDIV_EXACT_H_
#define DEGDIV_EXACT_H_

#include <span>
#include <vector>

#include "degdiv/graph.h"
#include "degdiv/witness.h"

namespace degdiv {

inline constexpr int kDefaultFCap = 20;
inline constexpr int kDefaultHomCap = 60;
inline constexpr int kDefaultBallCap = 22;

// Maximum number of distinct degrees over all nonempty induced subgraphs,
// with a witness. Ties between subsets resolve to the smallest bitmask, so
// the witness does not depend on `threads`. Throws TooLarge above `cap`
// (hard limit 40).
DistinctWitness exact_f(const Graph& g, int cap = kDefaultFCap, int threads = 1);

struct HomResult {
  int value = 0;
  VertexSet witness;   // a clique or an independent set of size `value`
  bool is_clique = true;
};

// Largest clique in g, by branch and bound with greedy-colouring bounds.
VertexSet max_clique(const Graph& g);

// max(clique number, independence number). Throws TooLarge above `cap`.
HomResult exact_hom(const Graph& g, int cap = kDefaultHomCap);

struct SmallBallInstance {
  std::vector<double> weights;  // nonzero
  std::vector<double> probs;    // each in [0.1, 0.9]
  double half_width = 0.0;
};

// max over c of P(|sum a_i X_i - c| <= w) for independent X_i ~ Be(p_i), by
// enumerating all 2^n atoms. Throws TooLarge above `cap`, InvalidParams on a
// malformed instance.
double exact_small_ball(const SmallBallInstance& inst, int cap = kDefaultBallCap);

// Largest fraction of sorted `values` (weighted by `mass`) inside a window
// [x, x + 2w]. Values within a relative 1e-9 of the window edge count as
// inside. Shared by the exact oracle and the Monte-Carlo estimator.
struct WindowMax {
  double mass = 0.0;
  double left = 0.0;  // left edge of a maximizing window
};
WindowMax max_window_mass(std::span<const double> sorted_values,
                          std::span<const double> mass, double half_width);

// C(n, floor(n/2)) / 2^n.
double lo_reference(int n);

}  // namespace degdiv

#endif  // DEGDIV_EXACT_H_
