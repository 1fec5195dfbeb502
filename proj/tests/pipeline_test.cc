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
#include <vector>

#include <gtest/gtest.h>

#include "degdiv/distributions.h"
#include "degdiv/error.h"
#include "degdiv/generators.h"
#include "degdiv/graph.h"
#include "degdiv/rng.h"
#include "degdiv/witness.h"

namespace degdiv {
namespace {

Graph from(int n, std::vector<std::pair<int, int>> e) { return Graph::from_edges(n, e); }

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return from(n, e);
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return from(leaves + 1, e);
}

bool independent(const Graph& g, const VertexSet& s) {
  const auto m = s.members();
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (g.adjacent(m[a], m[b])) return false;
    }
  }
  return true;
}

TEST(TuranIndependentSet, Examples) {
  EXPECT_EQ(turan_independent_set(Graph(5)).size(), 5);
  EXPECT_EQ(turan_independent_set(turan(5, 5)).size(), 1);
  EXPECT_EQ(turan_independent_set(cycle(6)).size(), 3);
}

TEST(TuranIndependentSet, IndependentAndLargeEnough) {
  for (uint64_t s = 0; s < 30; ++s) {
    const Graph g = gnp(40 + static_cast<int>(s), 0.05 + 0.02 * s, s);
    const VertexSet i = turan_independent_set(g);
    EXPECT_TRUE(independent(g, i));
    EXPECT_GE(i.size(), g.n() / (degree_stats(g).average_degree + 1) - 1e-9);
  }
}

TEST(SeparatedToDistinct, SmallExample) {
  const Graph g = from(4, {{0, 3}, {1, 3}, {1, 2}, {2, 3}});
  SeparatedWitness w{ProbVector::constant(VertexSet::full(4), 0.5), VertexSet::of(4, {0, 3}), 1};
  EXPECT_NEAR(expected_degree(g, w.p, 0, VertexSet::full(4)), 0.5, 1e-12);
  EXPECT_NEAR(expected_degree(g, w.p, 3, VertexSet::full(4)), 1.5, 1e-12);
  Rng rng(1);
  const auto d = separated_to_distinct(g, w, kDefaultAttempts, rng);
  EXPECT_TRUE(verify_distinct(g, d));
  EXPECT_EQ(d.k(), 2);
  EXPECT_TRUE(d.U.contains(0));
  EXPECT_TRUE(d.U.contains(3));
  auto deg = induced_degrees(g, VertexSet::full(4));
  EXPECT_EQ(deg[0], 1);
  EXPECT_EQ(deg[3], 3);
}

TEST(SeparatedToDistinct, RejectsBadWitnesses) {
  const Graph g = star(4);  // leaves are twins
  Rng rng(2);
  const auto half = ProbVector::constant(VertexSet::full(5), 0.5);
  EXPECT_THROW(separated_to_distinct(g, {half, VertexSet::of(5, {1, 2}), 1}, 4, rng), Error);
  EXPECT_THROW(separated_to_distinct(g, {half, VertexSet::of(5, {0}), 1}, 4, rng), Error);
}

TEST(SeparatedToDistinct, ThreadIndependent) {
  const Graph g = turan(60, 6);
  // Vertices of different parts with staggered p.
  ProbVector p = ProbVector::constant(VertexSet::full(60), 0.5);
  for (int v = 0; v < 60; ++v) p.values[v] = 0.1 + 0.8 * turan_part(60, 6, v) / 5.0;
  VertexSet u(60);
  for (int part = 0; part < 6; ++part) u.insert(part * 10);
  ASSERT_TRUE(is_separated(g, p, u, 1));
  Rng a(9), b(9);
  const auto one = separated_to_distinct(g, {p, u, 1}, 8, a, 1);
  const auto many = separated_to_distinct(g, {p, u, 1}, 8, b, 3);
  EXPECT_EQ(one.S, many.S);
  EXPECT_EQ(one.U, many.U);
  EXPECT_TRUE(verify_distinct(g, one));
  EXPECT_GE(one.k(), 2);
}

TEST(BadToSeparated, Examples) {
  const Graph g = star(5);
  Rng rng(3);
  const auto d = Distribution::trivial(VertexSet::full(6));
  auto w = bad_to_separated(g, d, VertexSet::of(6, {0, 1}), 4, rng);
  EXPECT_EQ(w.U.size(), 2);
  EXPECT_TRUE(is_separated(g, w.p, w.U, 1));
  auto twins = bad_to_separated(g, d, VertexSet::of(6, {1, 2}), 4, rng);
  EXPECT_EQ(twins.U.size(), 1);
}

TEST(BadToSeparated, DiverseBlendOnRandomGraph) {
  int large = 0;
  for (uint64_t s = 0; s < 5; ++s) {
    const Graph g = gnp(300, 0.5, s);
    VertexSet u(300);
    for (int i = 0; i < 16; ++i) u.insert(i);
    const auto dist = diverse_blended(g, u, 15);
    Rng rng(s);
    const auto w = bad_to_separated(g, dist, u, kDefaultAttempts, rng);
    EXPECT_TRUE(is_separated(g, w.p, w.U, 1));
    large += w.U.size() >= 8;
  }
  EXPECT_GE(large, 4);
}

TEST(DistinctToDistribution, GapOneIsVacuous) {
  const Graph p3 = from(3, {{0, 1}, {1, 2}});
  const auto all = VertexSet::full(3);
  const auto d = distinct_to_distribution(p3, all, VertexSet::of(3, {0, 1}));
  Rng rng(4);
  EXPECT_DOUBLE_EQ(estimate_bad(d, p3, 0, 1, all, 5000, rng).value, 1.0);
  EXPECT_THROW(distinct_to_distribution(p3, all, VertexSet::of(3, {0, 2})), Error);
}

TEST(DistinctToDistribution, GapFive) {
  // Vertex 0 sees 7 members of S, vertex 1 sees 2.
  std::vector<std::pair<int, int>> e;
  for (int i = 2; i < 9; ++i) e.push_back({0, i});
  for (int i = 2; i < 4; ++i) e.push_back({1, i});
  const Graph g = from(9, e);
  const auto s = VertexSet::full(9);
  const auto d = distinct_to_distribution(g, s, VertexSet::of(9, {0, 1}));
  Rng rng(5);
  EXPECT_NEAR(estimate_bad(d, g, 0, 1, s, 50000, rng).value, 0.5, 0.02);
}

TEST(DistinctToDistribution, BadSumBound) {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    const Graph g = gnp(60, 0.3, seed);
    const auto w = witness_from_set(g, VertexSet::full(60));
    if (w.k() < 2) continue;
    const auto d = distinct_to_distribution(g, w.S, w.U);
    Rng rng(seed);
    const double total = bad_sum(d, g, w.U, w.S, 20000, rng);
    EXPECT_LE(total, 6 * w.k() * std::log2(w.k()) + 0.5);
  }
}

TEST(DiverseBlended, WidthAndErrors) {
  EXPECT_NEAR(diverse_blend_width(2), 1 / std::sqrt(168 * std::log(3.0)), 1e-15);
  const Graph g = gnp(100, 0.5, 1);
  const auto d = diverse_blended(g, VertexSet::of(100, {0, 1, 2}), 2);
  const auto& b = std::get<Distribution::Blended>(d.kind());
  EXPECT_NEAR(b.beta, diverse_blend_width(2), 1e-15);
  EXPECT_EQ(d.domain().size(), 100);

  const Graph s = star(6);
  EXPECT_THROW(diverse_blended(s, VertexSet::of(7, {1, 2, 3}), 2), Error);
  EXPECT_THROW(diverse_blended(g, VertexSet::of(100, {0, 1}), 2), Error);
  try {
    diverse_blended(s, VertexSet::of(7, {1, 2, 3}), 2);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotDiverse);
  }
}

TEST(DiverseBlended, BadSumOnRandomGraph) {
  const Graph g = gnp(200, 0.5, 2);
  VertexSet u(200);
  for (int i = 0; i < 9; ++i) u.insert(i);
  const auto d = diverse_blended(g, u, 8);
  Rng rng(6);
  const double total = bad_sum(d, g, u, VertexSet::full(200), 20000, rng);
  EXPECT_LE(total, 8 * 9 * std::log2(9.0) + 1);
}

void check_bounded(const Graph& g, int k, const BoundedDegreeResult& r) {
  ASSERT_EQ(static_cast<int>(r.anchors.size()), k + 1);
  ASSERT_EQ(static_cast<int>(r.controls.size()), k);
  EXPECT_EQ(r.U.size(), k + 1);
  for (int i = 0; i < k; ++i) {
    EXPECT_EQ(r.controls[i].size(), 2 * k);
    EXPECT_FALSE(r.controls[i].intersects(r.U));
    for (int j = i + 1; j < k; ++j) EXPECT_FALSE(r.controls[i].intersects(r.controls[j]));
    EXPECT_EQ(deg_to(g, r.anchors[i], r.controls[i]), 2 * k);
    for (int j = i + 1; j <= k; ++j) {
      EXPECT_LE(2 * deg_to(g, r.anchors[j], r.controls[i]), k);
    }
  }
}

TEST(BoundedDegree, RandomGraph) {
  for (uint64_t s = 0; s < 10; ++s) {
    const Graph g = gnp(200, 0.2, s);
    const auto r = bounded_degree_construct(g, 3);
    check_bounded(g, 3, r);
    Rng rng(s);
    EXPECT_LE(bad_sum(r.dist, g, r.U, VertexSet::full(200), 20000, rng), r.U.size() + 0.5);
  }
}

TEST(BoundedDegree, EmptyGraph) {
  try {
    bounded_degree_construct(Graph(10), 1);
    FAIL() << "expected InsufficientDegree";
  } catch (const InsufficientDegreeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientDegree);
    EXPECT_EQ(e.placed(), 0);
  }
}

void check_regularized(const Graph& g, const InducedSubgraph& h) {
  const double log_n = std::log2(static_cast<double>(g.n()));
  EXPECT_GE(h.graph.n(), g.n() / (30 * log_n));
  const auto st = degree_stats(h.graph);
  EXPECT_LE(st.max_degree, 5 * log_n * st.min_degree);
  for (std::size_t i = 0; i < h.to_parent.size(); ++i) {
    for (std::size_t j = i + 1; j < h.to_parent.size(); ++j) {
      ASSERT_EQ(h.graph.adjacent(i, j), g.adjacent(h.to_parent[i], h.to_parent[j]));
    }
  }
}

TEST(Regularize, RegularGraphUnchanged) {
  const Graph c = cycle(12);
  const auto h = regularize(c);
  EXPECT_EQ(h.graph.n(), 12);
  const Graph t = turan(20, 4);
  EXPECT_EQ(regularize(t).graph.n(), 20);
}

TEST(Regularize, Star) {
  const Graph s = star(99);
  const auto h = regularize(s);
  check_regularized(s, h);
  EXPECT_GE(h.graph.n(), 1);
}

TEST(Regularize, RandomSuite) {
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng.below(150));
    const double p = rng.uniform(0.0, 0.6);
    Graph g = gnp(n, p, 1000 + t);
    if (t % 4 == 0) {
      // Planted hub to exercise the first phase.
      std::vector<std::pair<int, int>> e = g.edges();
      for (int v = 1; v < n; ++v) e.push_back({0, v});
      g = Graph::from_edges(n, e);
    }
    check_regularized(g, regularize(g));
  }
  EXPECT_THROW(regularize(Graph(1)), Error);
}

TEST(DiversityGraph, Examples) {
  EXPECT_EQ(diversity_graph(Graph(6), 1.0 / 48).edge_count(), 15);
  std::vector<std::pair<int, int>> matching;
  for (int i = 0; i < 5; ++i) matching.push_back({2 * i, 2 * i + 1});
  EXPECT_EQ(diversity_graph(Graph::from_edges(10, matching), 1.0 / 48).edge_count(), 0);
  EXPECT_EQ(diversity_graph(turan(100, 100), 1.0 / 48).edge_count(), 4950);
  EXPECT_THROW(diversity_graph(Graph(3), -1), Error);
}

}  // namespace
}  // namespace degdiv
