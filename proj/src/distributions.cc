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

#include "degdiv/distributions.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "degdiv/error.h"
#include "degdiv/exact.h"

namespace degdiv {

ProbVector ProbVector::constant(const VertexSet& domain, double value) {
  return ProbVector{domain, std::vector<double>(domain.universe(), value)};
}

Distribution Distribution::trivial(VertexSet support) {
  VertexSet domain = support;
  return Distribution(Trivial{std::move(support)}, std::move(domain));
}

Distribution Distribution::uniform_constant(VertexSet support) {
  VertexSet domain = support;
  return Distribution(UniformConstant{std::move(support)}, std::move(domain));
}

Distribution Distribution::blended(VertexSet blend, VertexSet support, double beta) {
  if (!(beta > 0.0 && beta <= 0.4)) {
    throw Error(ErrorCode::kInvalidParams,
                "blend width must lie in (0, 0.4], got " + std::to_string(beta));
  }
  if (blend.universe() != support.universe()) {
    throw Error(ErrorCode::kInvalidDomain, "blend and support over different graphs");
  }
  VertexSet domain = support;
  return Distribution(Blended{std::move(blend), std::move(support), beta},
                      std::move(domain));
}

Distribution Distribution::product(std::vector<Distribution> factors) {
  if (factors.empty()) {
    throw Error(ErrorCode::kInvalidDomain, "product needs at least one factor");
  }
  std::vector<Distribution> flat;
  for (Distribution& f : factors) {
    if (auto* inner = std::get_if<Product>(&f.kind_)) {
      for (Distribution& g : inner->factors) flat.push_back(std::move(g));
    } else {
      flat.push_back(std::move(f));
    }
  }
  VertexSet domain(flat.front().universe());
  for (const Distribution& f : flat) {
    if (f.universe() != domain.universe()) {
      throw Error(ErrorCode::kInvalidDomain, "product factors over different graphs");
    }
    if (f.domain().intersects(domain)) {
      throw Error(ErrorCode::kInvalidDomain, "product factors overlap");
    }
    domain |= f.domain();
  }
  if (flat.size() == 1) return std::move(flat.front());
  return Distribution(Product{std::move(flat)}, std::move(domain));
}

Distribution Distribution::with_trivial_rest(Distribution d) {
  VertexSet rest = d.domain().complement();
  if (rest.empty()) return d;
  std::vector<Distribution> parts;
  parts.push_back(std::move(d));
  parts.push_back(trivial(std::move(rest)));
  return product(std::move(parts));
}

Distribution Distribution::lift(std::span<const int> to_parent,
                                int parent_universe) const {
  return std::visit(
      [&](const auto& k) -> Distribution {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          return trivial(k.support.lift(to_parent, parent_universe));
        } else if constexpr (std::is_same_v<T, UniformConstant>) {
          return uniform_constant(k.support.lift(to_parent, parent_universe));
        } else if constexpr (std::is_same_v<T, Blended>) {
          return blended(k.blend.lift(to_parent, parent_universe),
                         k.support.lift(to_parent, parent_universe), k.beta);
        } else {
          std::vector<Distribution> lifted;
          for (const Distribution& f : k.factors) {
            lifted.push_back(f.lift(to_parent, parent_universe));
          }
          return product(std::move(lifted));
        }
      },
      kind_);
}

void blended_vector(const Graph& g, const VertexSet& blend, const VertexSet& support,
                    std::span<const double> alphas, std::vector<double>& out) {
  if (static_cast<int>(alphas.size()) != blend.size()) {
    throw Error(ErrorCode::kInvalidParams, "one coefficient per blend vertex required");
  }
  support.for_each([&](int v) { out[v] = 0.5; });
  std::size_t i = 0;
  blend.for_each([&](int u) {
    const double a = alphas[i++];
    (g.neighbors(u) & support).for_each([&](int v) { out[v] += a; });
  });
  support.for_each([&](int v) { out[v] = std::clamp(out[v], kProbFloor, kProbCeil); });
}

void Distribution::sample_into(const Graph& g, Rng& rng, std::vector<double>& out) const {
  if (universe() != g.n()) {
    throw Error(ErrorCode::kInvalidDomain, "distribution and graph sizes differ");
  }
  if (static_cast<int>(out.size()) != g.n()) out.assign(g.n(), 0.0);
  std::visit(
      [&](const auto& k) {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, Trivial>) {
          k.support.for_each([&](int v) { out[v] = 0.5; });
        } else if constexpr (std::is_same_v<T, UniformConstant>) {
          const double a = rng.uniform(kProbFloor, kProbCeil);
          k.support.for_each([&](int v) { out[v] = a; });
        } else if constexpr (std::is_same_v<T, Blended>) {
          std::vector<double> alphas(k.blend.size());
          for (double& a : alphas) a = rng.uniform(-k.beta, k.beta);
          blended_vector(g, k.blend, k.support, alphas, out);
        } else {
          for (const Distribution& f : k.factors) f.sample_into(g, rng, out);
        }
      },
      kind_);
}

ProbVector Distribution::sample(const Graph& g, Rng& rng) const {
  ProbVector p{domain_, std::vector<double>(g.n(), 0.0)};
  sample_into(g, rng, p.values);
  return p;
}

double expected_degree(const Graph& g, const ProbVector& p, int u, const VertexSet& s) {
  if (s.universe() != p.domain.universe() || s.universe() != g.n() ||
      !s.is_subset_of(p.domain)) {
    throw Error(ErrorCode::kInvalidDomain, "coordinates missing from probability vector");
  }
  double total = 0.0;
  (g.neighbors(u) & s).for_each([&](int v) { total += p.values[v]; });
  return total;
}

bool is_separated(const Graph& g, const ProbVector& p, const VertexSet& u, double gap) {
  if (u.size() < 2 || gap <= 0.0) return true;
  std::vector<double> e;
  u.for_each([&](int x) { e.push_back(expected_degree(g, p, x, p.domain)); });
  std::sort(e.begin(), e.end());
  for (std::size_t i = 1; i < e.size(); ++i) {
    if (e[i] - e[i - 1] < gap) return false;
  }
  return true;
}

BadEstimate window_estimate(std::vector<double> samples, double half_width) {
  BadEstimate est;
  est.trials = static_cast<int>(samples.size());
  if (samples.empty()) return est;
  std::sort(samples.begin(), samples.end());
  const std::vector<double> unit(samples.size(), 1.0);
  const double hits = max_window_mass(samples, unit, half_width).mass;
  est.value = std::min(1.0, hits / est.trials);
  est.std_err = std::sqrt(est.value * (1.0 - est.value) / est.trials);
  return est;
}

namespace {

void check_trials(int trials) {
  if (trials < kMinTrials) {
    throw Error(ErrorCode::kInsufficientTrials,
                "need at least " + std::to_string(kMinTrials) + " trials, got " +
                    std::to_string(trials));
  }
}

// samples[i][t]: expected degree into s of vertices[i] at trial t.
std::vector<std::vector<double>> expected_degree_batch(const Distribution& dist,
                                                       const Graph& g,
                                                       const std::vector<int>& vertices,
                                                       const VertexSet& s, int trials,
                                                       Rng& rng) {
  if (s.universe() != dist.universe() || !s.is_subset_of(dist.domain())) {
    throw Error(ErrorCode::kInvalidDomain, "S is not covered by the distribution");
  }
  std::vector<std::vector<int>> reach(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    reach[i] = (g.neighbors(vertices[i]) & s).members();
  }
  std::vector<std::vector<double>> out(vertices.size(), std::vector<double>(trials));
  std::vector<double> p(g.n(), 0.0);
  for (int t = 0; t < trials; ++t) {
    dist.sample_into(g, rng, p);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      double total = 0.0;
      for (int v : reach[i]) total += p[v];
      out[i][t] = total;
    }
  }
  return out;
}

BadEstimate pair_from_batch(const std::vector<double>& a, const std::vector<double>& b,
                            double half_width) {
  std::vector<double> diff(a.size());
  for (std::size_t t = 0; t < a.size(); ++t) diff[t] = a[t] - b[t];
  return window_estimate(std::move(diff), half_width);
}

}  // namespace

BadEstimate estimate_bad(const Distribution& dist, const Graph& g, int u, int v,
                         const VertexSet& s, int trials, Rng& rng, double half_width) {
  if (u == v) throw Error(ErrorCode::kInvalidPair, "bad of a vertex with itself");
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n()) {
    throw Error(ErrorCode::kInvalidSet, "vertex outside graph");
  }
  check_trials(trials);
  const auto batch = expected_degree_batch(dist, g, {u, v}, s, trials, rng);
  return pair_from_batch(batch[0], batch[1], half_width);
}

std::vector<PairBad> bad_pairs(const Distribution& dist, const Graph& g,
                               const VertexSet& u, const VertexSet& s, int trials,
                               Rng& rng, double half_width) {
  check_trials(trials);
  const std::vector<int> members = u.members();
  std::vector<PairBad> out;
  if (members.size() < 2) return out;
  const auto batch = expected_degree_batch(dist, g, members, s, trials, rng);
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      out.push_back({members[i], members[j], pair_from_batch(batch[i], batch[j], half_width)});
    }
  }
  return out;
}

double bad_sum(const Distribution& dist, const Graph& g, const VertexSet& u,
               const VertexSet& s, int trials, Rng& rng, double half_width) {
  double total = 0.0;
  for (const PairBad& pb : bad_pairs(dist, g, u, s, trials, rng, half_width)) {
    total += pb.estimate.value;
  }
  return total;
}

double bad_cross(const Distribution& dist, const Graph& g, const VertexSet& left,
                 const VertexSet& right, const VertexSet& s, int trials, Rng& rng,
                 double half_width) {
  check_trials(trials);
  if (left.intersects(right)) throw Error(ErrorCode::kInvalidPair, "cross sets overlap");
  std::vector<int> members = left.members();
  const std::size_t split = members.size();
  for (int v : right.members()) members.push_back(v);
  if (split == 0 || split == members.size()) return 0.0;
  const auto batch = expected_degree_batch(dist, g, members, s, trials, rng);
  double total = 0.0;
  for (std::size_t i = 0; i < split; ++i) {
    for (std::size_t j = split; j < members.size(); ++j) {
      total += pair_from_batch(batch[i], batch[j], half_width).value;
    }
  }
  return total;
}

}  // namespace degdiv
