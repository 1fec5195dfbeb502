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

#include "degdiv/graph.h"

#include <sstream>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "degdiv/error.h"
#include "degdiv/generators.h"
#include "degdiv/graph_io.h"
#include "degdiv/rng.h"
#include "oracles.h"

namespace degdiv {
namespace {

Graph path3() {
  std::vector<std::pair<int, int>> e{{0, 1}, {1, 2}};
  return Graph::from_edges(3, e);
}

Graph cycle(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, e);
}

Graph star(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph::from_edges(leaves + 1, e);
}

Graph complete(int n) { return turan(n, n); }

TEST(VertexSet, BasicOps) {
  VertexSet s(130);
  s.insert(0);
  s.insert(64);
  s.insert(129);
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(64));
  EXPECT_FALSE(s.contains(63));
  EXPECT_EQ(s.members(), (std::vector<int>{0, 64, 129}));
  s.erase(64);
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.complement().size(), 128);
  EXPECT_TRUE(VertexSet(5).empty());
  EXPECT_THROW(s.insert(130), Error);
}

TEST(Graph, FromEdgesRejectsLoopsAndRange) {
  std::vector<std::pair<int, int>> loop{{1, 1}};
  EXPECT_THROW(Graph::from_edges(3, loop), Error);
  std::vector<std::pair<int, int>> out{{0, 3}};
  EXPECT_THROW(Graph::from_edges(3, out), Error);
  std::vector<std::pair<int, int>> dup{{0, 1}, {1, 0}};
  EXPECT_EQ(Graph::from_edges(3, dup).edge_count(), 1);
}

TEST(InducedSubgraph, Examples) {
  auto k3 = induced_subgraph(complete(4), VertexSet::of(4, {0, 1, 2}));
  EXPECT_EQ(k3.graph.n(), 3);
  EXPECT_EQ(k3.graph.edge_count(), 3);

  auto two = induced_subgraph(path3(), VertexSet::of(3, {0, 2}));
  EXPECT_EQ(two.graph.n(), 2);
  EXPECT_EQ(two.graph.edge_count(), 0);
  EXPECT_EQ(two.to_parent, (std::vector<int>{0, 2}));

  auto p3 = induced_subgraph(cycle(5), VertexSet::of(5, {0, 1, 2}));
  EXPECT_EQ(p3.graph.edge_count(), 2);
  EXPECT_TRUE(p3.graph.adjacent(0, 1));
  EXPECT_TRUE(p3.graph.adjacent(1, 2));
  EXPECT_FALSE(p3.graph.adjacent(0, 2));

  EXPECT_THROW(induced_subgraph(cycle(5), VertexSet(6)), Error);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(complete(4)).edge_count(), 0);
  EXPECT_EQ(complement(Graph(3)).edge_count(), 3);
}

TEST(DegTo, Examples) {
  EXPECT_EQ(deg_to(complete(4), 0, VertexSet::of(4, {1, 2, 3})), 3);
  EXPECT_EQ(deg_to(cycle(5), 0, VertexSet(5)), 0);
  EXPECT_EQ(deg_to(cycle(5), 0, VertexSet::of(5, {1, 2})), 1);
}

TEST(Diversity, Examples) {
  const int n = 6;
  EXPECT_EQ(diversity(complete(n), 1, 4, VertexSet::full(n)), 2);
  EXPECT_EQ(diversity(Graph(n), 1, 4, VertexSet::full(n)), 0);
  EXPECT_EQ(diversity(path3(), 0, 2, VertexSet::full(3)), 0);
  EXPECT_THROW(diversity(path3(), 1, 1, VertexSet::full(3)), Error);
}

TEST(DistinctDegreeCount, Examples) {
  EXPECT_EQ(distinct_degree_count(complete(5), VertexSet::full(5)), 1);
  EXPECT_EQ(distinct_degree_count(path3(), VertexSet::full(3)), 2);
  EXPECT_EQ(distinct_degree_count(star(4), VertexSet::full(5)), 2);
  EXPECT_THROW(distinct_degree_count(path3(), VertexSet(3)), Error);
}

TEST(DegreeStats, Examples) {
  auto k4 = degree_stats(complete(4));
  EXPECT_EQ(k4.max_degree, 3);
  EXPECT_EQ(k4.min_degree, 3);
  EXPECT_DOUBLE_EQ(k4.average_degree, 3.0);
  auto s = degree_stats(star(4));
  EXPECT_EQ(s.max_degree, 4);
  EXPECT_EQ(s.min_degree, 1);
  EXPECT_DOUBLE_EQ(s.average_degree, 8.0 / 5.0);
  auto e = degree_stats(Graph(3));
  EXPECT_EQ(e.max_degree, 0);
  EXPECT_EQ(e.min_degree, 0);
  EXPECT_DOUBLE_EQ(e.average_degree, 0.0);
}

TEST(DiverseAndBalanced, Examples) {
  const auto k4 = complete(4);
  const auto all = VertexSet::full(4);
  EXPECT_TRUE(is_diverse(k4, VertexSet::of(4, {0, 1}), all, 2));
  EXPECT_FALSE(is_diverse(k4, VertexSet::of(4, {0, 1}), all, 3));
  EXPECT_TRUE(is_diverse(path3(), VertexSet::of(3, {0, 2}), VertexSet::full(3), 0));

  EXPECT_TRUE(is_balanced(k4, VertexSet::of(4, {0, 1, 2}), all, 1));
  EXPECT_FALSE(is_balanced(k4, VertexSet::of(4, {0, 1, 2}), VertexSet::of(4, {3}), 0.5));
  EXPECT_TRUE(is_balanced(Graph(4), VertexSet::of(4, {0, 1}), all, 0));
  EXPECT_DOUBLE_EQ(balance(k4, VertexSet::of(4, {0, 1, 2}), VertexSet::of(4, {3})), 1.0);
}

// Degrees in G[S] are recounted from the adjacency matrix.
TEST(GraphProperties, RandomSuite) {
  Rng rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(14));
    const Graph g = gnp(n, rng.uniform(0.1, 0.9), trial);
    const Graph h = complement(g);
    const auto m = oracle::matrix_of(g);
    VertexSet s(n), small(n);
    for (int v = 0; v < n; ++v) {
      if (rng.bernoulli(0.6)) s.insert(v);
    }
    s.insert(0);
    s.for_each([&](int v) {
      if (rng.bernoulli(0.5)) small.insert(v);
    });

    EXPECT_EQ(distinct_degree_count(g, s), distinct_degree_count(h, s));
    auto deg = induced_degrees(g, s);
    for (int v = 0; v < n; ++v) {
      if (!s.contains(v)) {
        EXPECT_EQ(deg[v], -1);
        continue;
      }
      int d = 0;
      for (int u = 0; u < n; ++u) d += s.contains(u) && m[v][u];
      EXPECT_EQ(deg[v], d);
    }

    auto st = degree_stats(g);
    EXPECT_LE(st.min_degree, st.average_degree);
    EXPECT_LE(st.average_degree, st.max_degree);

    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        EXPECT_EQ(diversity(g, u, v, s), diversity(g, v, u, s));
        EXPECT_LE(diversity(g, u, v, small), diversity(g, u, v, s));
        VertexSet away = s;
        away.erase(u);
        away.erase(v);
        EXPECT_EQ(diversity(g, u, v, away), diversity(h, u, v, away));
      }
    }
  }
}

TEST(GraphIo, RoundTrip) {
  const Graph g = gnp(30, 0.3, 5);
  std::stringstream ss;
  write_edge_list(ss, g);
  const Graph back = read_edge_list(ss);
  EXPECT_EQ(back.n(), g.n());
  EXPECT_EQ(back.edges(), g.edges());
}

TEST(GraphIo, CommentsAndBlankLines) {
  std::istringstream in("# header\n3 2\n\n0 1\n# mid\n1 2\n");
  const Graph g = read_edge_list(in);
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edge_count(), 2);
}

TEST(GraphIo, RejectsMalformed) {
  std::istringstream wrong_count("3 2\n0 1\n");
  EXPECT_THROW(read_edge_list(wrong_count), Error);
  std::istringstream bad_vertex("3 1\n0 7\n");
  EXPECT_THROW(read_edge_list(bad_vertex), Error);
  std::istringstream junk("x y\n");
  EXPECT_THROW(read_edge_list(junk), Error);
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.txt"), Error);
}

}  // namespace
}  // namespace degdiv
