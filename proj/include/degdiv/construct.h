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

#ifndef DEGDIV_CONSTRUCT_H_
#define DEGDIV_CONSTRUCT_H_

#include <optional>
#include <string>
#include <vector>

#include "degdiv/distributions.h"
#include "degdiv/error.h"
#include "degdiv/graph.h"
#include "degdiv/rng.h"
#include "degdiv/witness.h"

namespace degdiv {

// Knobs of the recursive construction. asymptotic() holds the large-n
// constants; desk() (the default) scales them so that the branches are
// reachable on graphs with a few hundred vertices.
struct PipelineConfig {
  int schema = 1;

  // Case split.
  double diverse_coeff = 2.0;     // diverse-set threshold, times k^1.5
  double mid_degree_coeff = 1.0;  // mid-degree band, times k^1.5
  double cluster_factor = 3.0;    // large cluster has >= this * k members
  double high_split = 2.0;        // Y1: degree into the cluster >= this * k
  double low_split = 1.0;         // Y2: degree into the cluster <= this * k
  double leaf_k = 1.0;            // k at or below this: trivial leaf set
  int max_depth = 12;

  // Postcondition check.
  double bad_slack = 8.0;
  int bad_trials = 20000;
  double window = 1.0;

  // Dense branch (regularize, diversity graph, control sets).
  bool dense_branch = false;
  double dense_threshold = 1000.0;  // used while n < this * k^2.5
  double epsilon = 1.0 / 48.0;
  double s1_factor = 600.0;
  int w_retries = 16;
  double control_set_coeff = 9.0 / 524288.0;
  double case1_keep_coeff = 1e-3;

  // Conversion to a distinct-degree witness.
  int separate_attempts = 16;
  int distinct_attempts = 16;
  std::vector<double> k_ladder;  // empty: 1, 2, 4, ... up to n/2
  bool greedy_fallback = true;
  int greedy_restarts = 8;

  static PipelineConfig asymptotic();
  static PipelineConfig desk();
};

// U with a distribution on [0.1, 0.9]^V(G) (full domain) meant to keep the
// pairwise bad values of U small.
struct Construction {
  VertexSet U;
  Distribution dist;
  std::string route;  // which branches produced U, e.g. "II(I:bounded,leaf)"
  double bad = -1.0;  // estimated bad_sum(U) when checked, else -1
};

class ConstructionFailed : public Error {
 public:
  ConstructionFailed(const std::string& message, std::optional<Construction> partial)
      : Error(ErrorCode::kConstructionFailed, message), partial_(std::move(partial)) {}
  const std::optional<Construction>& partial() const { return partial_; }

 private:
  std::optional<Construction> partial_;
};

// Recursive Case I / Case II construction with real-valued k. Throws
// ConstructionFailed (carrying a fallback pair) when every branch fails or
// the estimated bad_sum exceeds cfg.bad_slack * |U| * log2(|U| + 1).
Construction nt_construct(const Graph& g, double k, const PipelineConfig& cfg,
                          Rng& rng);

struct FindResult {
  DistinctWitness witness;
  std::string method;  // "nt_construct" or "greedy"
  double k = 0.0;      // ladder value that produced the witness (0 for greedy)
};

// Best verified witness from the construction ladder and the greedy search.
FindResult find_distinct_degrees(const Graph& g, const PipelineConfig& cfg,
                                 Rng& rng, int threads = 1);

// Local search over S: toggle single vertices while the number of distinct
// degrees in G[S] grows; restart from random subsets.
DistinctWitness greedy_distinct(const Graph& g, int restarts, Rng& rng);

}  // namespace degdiv

#endif  // DEGDIV_CONSTRUCT_H_
