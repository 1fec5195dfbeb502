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

#ifndef DEGDIV_DISTRIBUTIONS_H_
#define DEGDIV_DISTRIBUTIONS_H_

#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "degdiv/graph.h"
#include "degdiv/rng.h"

namespace degdiv {

inline constexpr double kProbFloor = 0.1;
inline constexpr double kProbCeil = 0.9;
inline constexpr double kDefaultHalfWidth = 1.0;
inline constexpr int kDefaultTrials = 20000;
inline constexpr int kMinTrials = 1000;

// Retention probabilities p_v for v in `domain`. `values` is indexed by
// vertex; entries outside the domain are ignored.
struct ProbVector {
  VertexSet domain;
  std::vector<double> values;

  static ProbVector constant(const VertexSet& domain, double value);
  double operator[](int v) const { return values[v]; }
};

// A distribution on [0.1, 0.9]^domain.
class Distribution {
 public:
  struct Trivial {
    VertexSet support;
  };
  struct UniformConstant {
    VertexSet support;
  };
  // 1/2 + sum of alpha_u * (N(u) ∩ support) over u in `blend`, alpha_u
  // uniform on [-beta, beta], then clamped into [0.1, 0.9].
  struct Blended {
    VertexSet blend;
    VertexSet support;
    double beta = 0.0;
  };
  struct Product {
    std::vector<Distribution> factors;
  };
  using Kind = std::variant<Trivial, UniformConstant, Blended, Product>;

  static Distribution trivial(VertexSet support);
  static Distribution uniform_constant(VertexSet support);
  static Distribution blended(VertexSet blend, VertexSet support, double beta);
  // Factors must have pairwise disjoint domains over one universe.
  static Distribution product(std::vector<Distribution> factors);
  // `d` times the trivial distribution on the rest of its universe.
  static Distribution with_trivial_rest(Distribution d);

  const VertexSet& domain() const { return domain_; }
  int universe() const { return domain_.universe(); }
  const Kind& kind() const { return kind_; }

  Distribution lift(std::span<const int> to_parent, int parent_universe) const;

  // Writes sampled coordinates of the domain into `out` (size g.n()).
  // Throws InvalidDomain if the universe does not match g.
  void sample_into(const Graph& g, Rng& rng, std::vector<double>& out) const;
  ProbVector sample(const Graph& g, Rng& rng) const;

 private:
  Distribution(Kind kind, VertexSet domain)
      : kind_(std::move(kind)), domain_(std::move(domain)) {}

  Kind kind_;
  VertexSet domain_;
};

// Pre-clamp blended vector for explicit coefficients (alphas[i] belongs to
// the i-th member of `blend` in increasing order), clamped into [0.1, 0.9].
// Written into `out` on `support` only.
void blended_vector(const Graph& g, const VertexSet& blend,
                    const VertexSet& support, std::span<const double> alphas,
                    std::vector<double>& out);

// Sum of p_v over v in N(u) ∩ s. Throws InvalidDomain unless s ⊆ p.domain.
double expected_degree(const Graph& g, const ProbVector& p, int u,
                       const VertexSet& s);

// Pairwise expected-degree gaps over p.domain are all >= gap.
bool is_separated(const Graph& g, const ProbVector& p, const VertexSet& u,
                  double gap);

struct BadEstimate {
  double value = 0.0;
  int trials = 0;
  double std_err = 0.0;
};

// Monte-Carlo estimate of max_c P(|E d^S(u) - E d^S(v) - c| <= half_width)
// under p ~ dist.
BadEstimate estimate_bad(const Distribution& dist, const Graph& g, int u, int v,
                         const VertexSet& s, int trials, Rng& rng,
                         double half_width = kDefaultHalfWidth);

struct PairBad {
  int u = 0;
  int v = 0;
  BadEstimate estimate;
};

// All unordered pairs of `u`, estimated from one shared sample batch.
std::vector<PairBad> bad_pairs(const Distribution& dist, const Graph& g,
                               const VertexSet& u, const VertexSet& s,
                               int trials, Rng& rng,
                               double half_width = kDefaultHalfWidth);

double bad_sum(const Distribution& dist, const Graph& g, const VertexSet& u,
               const VertexSet& s, int trials, Rng& rng,
               double half_width = kDefaultHalfWidth);

// Sum over (a, b) in `left` x `right`; the two sets must be disjoint.
double bad_cross(const Distribution& dist, const Graph& g, const VertexSet& left,
                 const VertexSet& right, const VertexSet& s, int trials, Rng& rng,
                 double half_width = kDefaultHalfWidth);

// Sorted-sample window statistic used by every bad estimator.
BadEstimate window_estimate(std::vector<double> samples, double half_width);

}  // namespace degdiv

#endif  // DEGDIV_DISTRIBUTIONS_H_
