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

#ifndef DEGDIV_RANDOM_EXPERIMENTS_H_
#define DEGDIV_RANDOM_EXPERIMENTS_H_

#include <cstdint>
#include <string>

#include "degdiv/graph.h"
#include "degdiv/pipeline.h"
#include "degdiv/rng.h"
#include "degdiv/witness.h"

namespace degdiv {

// Degree windows and factors of the G(n,p) lower-bound argument, kept in one
// place. Names say what each one bounds.
namespace gnp_constants {
inline constexpr double kCandidateDegree = 2.0;   // d(u) <= 2pn for u in U
inline constexpr double kBackDegree = 10.0;       // d^U(w) < 10 p|U| on W
inline constexpr double kDiversityDivisor = 3.0;  // U is pn/3-diverse to W
inline constexpr double kBlendDivisor = 5.0;      // beta = |U| / (5pn)
inline constexpr double kOutlierShare = 1.0 / 25.0;  // good: <= d^W(u)/25 outliers
inline constexpr double kInnerLow = 0.2;          // outlier: q outside [0.2, 0.8]
inline constexpr double kInnerHigh = 0.8;
inline constexpr double kGoodShare = 0.5;         // need |U^g| >= |U|/2
inline constexpr double kCollisionEdges = 120.0;  // need e(J) <= 120|U|
inline constexpr double kDegreeWindow = 2.0;      // |d_H - E| <= sqrt(2pn)
inline constexpr double kPairWindow = 2.0;        // pairs with gap <= 2 sqrt(2pn)
inline constexpr double kTargetDivisor = 4.0;     // |U| = cbrt(p n^2) / 4
inline constexpr double kCeilingFactor = 128.0;   // f <= 128 cbrt(p n^2)
inline constexpr double kHomFactor = 4.0;         // hom <= 4 ln(n) / p
inline constexpr double kPrivateDegree = 5.0;     // sparse U: degree >= 5|U|
inline constexpr double kSparseFixedDivisor = 8.0;  // sparse fixed U: |U| = pn/8
}  // namespace gnp_constants

// U with bounded degrees, diverse to W, and with few neighbours in U from
// every vertex of W.
struct ConvenientWitness {
  VertexSet U;
  VertexSet W;
  double p = 0.0;
};

// Default |U| for the lower-bound pipeline: floor(cbrt(p n^2) / 4).
int convenient_target(int n, double p);

// Re-checks every ConvenientWitness invariant.
bool verify_convenient(const Graph& g, const ConvenientWitness& w);

// Takes the `target` lowest-index vertices of degree <= 2pn as U, drops the
// vertices with >= 10p|U| neighbours in U, and keeps the rest as W. Throws
// InvalidParams unless sqrt(n) <= 4 target <= pn, NotConvenient when the
// invariants fail on this graph.
ConvenientWitness p_convenient_set(const Graph& g, double p, int target);

// |U| / (5pn), capped at 0.4 so the blended coordinates stay meaningful.
double gnp_blend_width(int u_size, double p, int n);

// Blended coordinates over W with beta = |U|/(5pn); U is kept with
// probability 1 and the rest of the graph at 1/2. Per attempt, finds good
// vertices and the close-expectation graph J on them, accepts when
// |U^g| >= |U|/2 and e(J) <= 120|U|, and keeps the largest independent set
// of J over accepted attempts. Throws SeparationFailed when no attempt is
// accepted or fewer than two vertices survive.
SeparatedWitness gnp_separate(const Graph& g, const ConvenientWitness& w, Rng& rng,
                              int attempts = kDefaultAttempts);

// Samples H ~ G(p) and keeps vertices of the separated set whose degree is
// within sqrt(2pn) of its expectation, one per realized degree among close
// pairs. Best of `attempts`. Throws RealizationFailed if every sample keeps
// nothing.
DistinctWitness gnp_realize(const Graph& g, const SeparatedWitness& w, double p,
                            Rng& rng, int attempts = kDefaultAttempts);

// True iff every u in U has at least |U| neighbours outside U and outside
// the neighbourhoods of the other members.
bool has_private_neighbours(const Graph& g, const VertexSet& u);

// Gives u_i (ordered by degree into U) exactly i private neighbours, so the
// degrees in G[S] strictly increase. Throws NotPrivate if the hypothesis of
// has_private_neighbours fails.
DistinctWitness sparse_distinct(const Graph& g, const VertexSet& u);

struct SparseChoice {
  VertexSet U;
  std::string rule;  // "high_degree" or "fixed"
};

// Candidate U for the sparse regime. Tries the largest k such that at least k
// vertices have degree >= factor * k (top k by degree, shrinking k until the
// private-neighbour hypothesis holds), and the lowest-index pn/8 vertices
// when that is at least 2. Returns the larger valid choice.
SparseChoice sparse_candidates(const Graph& g, double p,
                               double factor = gnp_constants::kPrivateDegree);

// max(1, floor(128 cbrt(p n^2))): the reporting ceiling for f(G(n,p)).
int upper_bound_probe(const Graph& g, double p);
int upper_bound_ceiling(int n, double p);

struct HomCheck {
  int passed = 0;
  int total = 0;
  double bound = 0.0;
  bool ok = false;  // passed >= 95% of total
};

// exact_hom(gnp(n, p, s)) <= 4 ln(n) / p over `seeds` derived seeds.
// Requires n <= the exact hom cap and 0 < p <= 1/2.
HomCheck hom_gnp_check(int n, double p, int seeds, uint64_t base_seed = 1);

struct GnpPipelineConfig {
  double target_divisor = gnp_constants::kTargetDivisor;
  int separate_attempts = kDefaultAttempts;
  int realize_attempts = kDefaultAttempts;
  double private_degree = gnp_constants::kPrivateDegree;
};

struct GnpOutcome {
  DistinctWitness witness;
  std::string method;  // "dense", "sparse:<rule>" or "failed:<error>"
  bool ok = false;
  int stage_size = 0;  // |U| for dense, candidate size for sparse
  int separated = 0;   // |U'| after separation (dense only)
};

// Full lower-bound pipeline on one graph. Dense: convenient set, separation,
// realization. Sparse: candidate selection and private neighbours. Failures
// are reported in the outcome; the witness is then a single vertex.
GnpOutcome run_gnp_pipeline(const Graph& g, double p, bool sparse,
                            const GnpPipelineConfig& cfg, Rng& rng);

}  // namespace degdiv

#endif  // DEGDIV_RANDOM_EXPERIMENTS_H_
