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

#include "degdiv/pipeline.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "degdiv/parallel.h"

namespace degdiv {

VertexSet turan_independent_set(const Graph& h) {
  const int n = h.n();
  VertexSet alive = VertexSet::full(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = h.degree(v);
  VertexSet chosen(n);
  auto remove = [&](int x) {
    alive.erase(x);
    h.neighbors(x).for_each([&](int y) {
      if (alive.contains(y)) --deg[y];
    });
  };
  while (!alive.empty()) {
    int best = -1;
    alive.for_each([&](int v) {
      if (best < 0 || deg[v] < deg[best]) best = v;
    });
    chosen.insert(best);
    VertexSet drop = h.neighbors(best) & alive;
    remove(best);
    drop.for_each(remove);
  }
  return chosen;
}

namespace {

std::vector<double> expected_degrees(const Graph& g, const ProbVector& p,
                                     const std::vector<int>& verts) {
  std::vector<double> out;
  out.reserve(verts.size());
  for (int u : verts) out.push_back(expected_degree(g, p, u, p.domain));
  return out;
}

// One representative per degree value among `cands` inside G[s], chosen by
// the greedy independent set on the equal-degree collision graph.
VertexSet distinct_representatives(const Graph& g, const VertexSet& s,
                                   const std::vector<int>& cands) {
  std::vector<int> kept;
  std::vector<int> deg;
  for (int u : cands) {
    if (!s.contains(u)) continue;
    kept.push_back(u);
    deg.push_back(deg_to(g, u, s));
  }
  GraphBuilder b(static_cast<int>(kept.size()));
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      if (deg[i] == deg[j]) b.add_edge(static_cast<int>(i), static_cast<int>(j));
    }
  }
  const Graph collisions = std::move(b).build();
  VertexSet out(g.n());
  turan_independent_set(collisions).for_each([&](int i) { out.insert(kept[i]); });
  return out;
}

}  // namespace

DistinctWitness separated_to_distinct(const Graph& g, const SeparatedWitness& w,
                                      int attempts, Rng& rng, int threads) {
  if (w.U.size() < 2) {
    throw Error(ErrorCode::kInvalidWitness, "separated set needs two vertices");
  }
  if (w.U.universe() != g.n() || w.p.domain.universe() != g.n()) {
    throw Error(ErrorCode::kInvalidDomain, "witness does not match graph");
  }
  if (w.gap < 1.0 || !is_separated(g, w.p, w.U, w.gap)) {
    throw Error(ErrorCode::kInvalidWitness, "set is not 1-separated");
  }
  std::vector<int> order = w.U.members();
  const std::vector<double> e = expected_degrees(g, w.p, order);
  std::vector<int> idx(order.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int a, int b) { return e[a] < e[b]; });
  std::vector<int> sorted;
  for (int i : idx) sorted.push_back(order[i]);
  std::vector<int> thinned;
  for (std::size_t i = 2; i < sorted.size(); i += 3) thinned.push_back(sorted[i]);

  attempts = std::max(1, attempts);
  const Rng base(rng());
  std::vector<DistinctWitness> slots(attempts);
  parallel_for(attempts, threads, [&](std::size_t a) {
    Rng r = base.split(a);
    VertexSet s(g.n());
    w.p.domain.for_each([&](int v) {
      if (r.uniform() < w.p[v]) s.insert(v);
    });
    DistinctWitness best{s, VertexSet(g.n())};
    for (const auto* cands : {&thinned, &sorted}) {
      if (cands->empty()) continue;
      VertexSet u = distinct_representatives(g, s, *cands);
      if (u.size() > best.U.size()) best.U = std::move(u);
    }
    slots[a] = std::move(best);
  });

  DistinctWitness best{VertexSet::of(g.n(), {sorted.front()}),
                       VertexSet::of(g.n(), {sorted.front()})};
  for (DistinctWitness& cand : slots) {
    if (cand.k() > best.k()) best = std::move(cand);
  }
  require_distinct(g, best);
  return best;
}

SeparatedWitness bad_to_separated(const Graph& g, const Distribution& dist,
                                  const VertexSet& u, int attempts, Rng& rng) {
  if (u.empty()) throw Error(ErrorCode::kInvalidSet, "empty vertex set");
  const std::vector<int> verts = u.members();
  const int m = static_cast<int>(verts.size());
  SeparatedWitness best;
  bool have = false;
  for (int a = 0; a < std::max(1, attempts); ++a) {
    ProbVector p = dist.sample(g, rng);
    const std::vector<double> e = expected_degrees(g, p, verts);
    GraphBuilder b(m);
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        if (std::abs(e[i] - e[j]) <= 1.0) b.add_edge(i, j);
      }
    }
    const Graph close = std::move(b).build();
    VertexSet kept(g.n());
    turan_independent_set(close).for_each([&](int i) { kept.insert(verts[i]); });
    if (!have || kept.size() > best.U.size()) {
      best = SeparatedWitness{std::move(p), std::move(kept), 1.0};
      have = true;
    }
    if (best.U.size() == m) break;
  }
  if (!is_separated(g, best.p, best.U, best.gap)) {
    throw Error(ErrorCode::kInvalidWitness, "separation recheck failed");
  }
  return best;
}

Distribution distinct_to_distribution(const Graph& g, const VertexSet& s,
                                      const VertexSet& u) {
  if (!verify_distinct(g, DistinctWitness{s, u})) {
    throw Error(ErrorCode::kInvalidWitness,
                "degrees of U in G[S] are not pairwise distinct");
  }
  return Distribution::with_trivial_rest(Distribution::uniform_constant(s));
}

double diverse_blend_width(int k) {
  const double m = k + 1.0;
  return 1.0 / std::sqrt(56.0 * m * std::log(m));
}

Distribution diverse_blended(const Graph& g, const VertexSet& u, int k) {
  if (k < 1 || u.size() != k + 1) {
    throw Error(ErrorCode::kInvalidParams,
                "need exactly k+1 vertices, got " + std::to_string(u.size()) +
                    " for k=" + std::to_string(k));
  }
  const VertexSet all = VertexSet::full(g.n());
  const double need = std::pow(k, 1.5) + k;
  if (!is_diverse(g, u, all, need)) {
    throw Error(ErrorCode::kNotDiverse,
                "neighbourhoods differ in fewer than " + std::to_string(need) +
                    " places");
  }
  return Distribution::blended(u, all, diverse_blend_width(k));
}

InsufficientDegreeError::InsufficientDegreeError(int placed, int wanted)
    : Error(ErrorCode::kInsufficientDegree,
            "placed " + std::to_string(placed) + " of " + std::to_string(wanted) +
                " anchors"),
      placed_(placed) {}

BoundedDegreeResult bounded_degree_construct(const Graph& g, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidParams, "k must be at least 1");
  const int n = g.n();
  VertexSet alive = VertexSet::full(n);
  BoundedDegreeResult out{VertexSet(n), Distribution::trivial(VertexSet(n)), {}, {}};
  std::vector<Distribution> factors;
  for (int i = 0; i < k; ++i) {
    int anchor = -1;
    alive.for_each([&](int v) {
      if (anchor < 0 && g.neighbors(v).intersection_size(alive) >= 2 * k) anchor = v;
    });
    if (anchor < 0) throw InsufficientDegreeError(i, k + 1);
    VertexSet y(n);
    int taken = 0;
    (g.neighbors(anchor) & alive).for_each([&](int v) {
      if (taken < 2 * k) {
        y.insert(v);
        ++taken;
      }
    });
    VertexSet drop = y;
    alive.for_each([&](int v) {
      if (2 * deg_to(g, v, y) >= k) drop.insert(v);
    });
    alive -= drop;
    out.anchors.push_back(anchor);
    out.U.insert(anchor);
    factors.push_back(Distribution::uniform_constant(y));
    out.controls.push_back(std::move(y));
  }
  if (alive.empty()) throw InsufficientDegreeError(k, k + 1);
  const int last = alive.members().front();
  out.anchors.push_back(last);
  out.U.insert(last);
  out.dist = Distribution::with_trivial_rest(Distribution::product(std::move(factors)));
  return out;
}

InducedSubgraph regularize(const Graph& g) {
  const int n = g.n();
  if (n < 2) throw Error(ErrorCode::kInvalidGraph, "regularize needs n >= 2");
  const double log_n = std::log2(static_cast<double>(n));
  VertexSet alive = VertexSet::full(n);
  std::vector<int> deg(n);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  int count = n;
  int64_t degree_total = 2 * g.edge_count();
  auto remove = [&](int x) {
    alive.erase(x);
    --count;
    degree_total -= 2 * deg[x];
    g.neighbors(x).for_each([&](int y) {
      if (alive.contains(y)) --deg[y];
    });
  };
  auto average = [&] {
    return count == 0 ? 0.0 : static_cast<double>(degree_total) / count;
  };

  const int rounds = static_cast<int>(std::ceil(log_n));
  for (int r = 0; r < rounds && count > 0; ++r) {
    const double avg = average();
    int max_deg = 0;
    alive.for_each([&](int v) { max_deg = std::max(max_deg, deg[v]); });
    if (max_deg <= 2.0 * avg * log_n) break;
    std::vector<int> heavy;
    alive.for_each([&](int v) {
      if (deg[v] >= avg * log_n) heavy.push_back(v);
    });
    // Remove from the alive set first so the cut is simultaneous.
    for (int v : heavy) remove(v);
  }

  while (count > 0) {
    int low = -1;
    alive.for_each([&](int v) {
      if (low < 0 || deg[v] < deg[low]) low = v;
    });
    if (!(5.0 * deg[low] < 2.0 * average())) break;
    remove(low);
  }
  return induced_subgraph(g, alive);
}

Graph diversity_graph(const Graph& g, double eps) {
  if (eps < 0) throw Error(ErrorCode::kInvalidParams, "eps must be non-negative");
  const int n = g.n();
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const double limit = eps * std::min(g.degree(u), g.degree(v));
      if (std::abs(g.degree(u) - g.degree(v)) > limit) continue;
      if (diversity(g, u, v) <= limit) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

}  // namespace degdiv
