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

#ifndef DEGDIV_GRAPH_H_
#define DEGDIV_GRAPH_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace degdiv {

// Subset of {0, ..., universe-1} packed into 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::span<const int> members);
  static VertexSet of(int universe, std::initializer_list<int> members) {
    return of(universe, std::span<const int>(members.begin(), members.size()));
  }

  int universe() const { return universe_; }
  bool contains(int v) const {
    return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1ULL);
  }
  void insert(int v);
  void erase(int v);
  int size() const;
  bool empty() const;
  std::vector<int> members() const;

  // Calls fn(v) for each member in increasing order.
  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      uint64_t bits = words_[w];
      while (bits) {
        fn(static_cast<int>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  int intersection_size(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  VertexSet complement() const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool operator==(const VertexSet& other) const = default;

  std::span<const uint64_t> words() const { return words_; }

  // Re-indexes a set over a subgraph into its parent graph.
  VertexSet lift(std::span<const int> to_parent, int parent_universe) const;

 private:
  void check_compatible(const VertexSet& other) const;

  int universe_ = 0;
  std::vector<uint64_t> words_;
};

// Simple undirected graph on vertices 0..n-1, stored as adjacency bitrows.
// Immutable once built.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);  // edgeless

  // Throws InvalidGraph on self-loops or out-of-range endpoints. Duplicate
  // edges collapse.
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  int64_t edge_count() const;
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  int degree(int v) const { return degrees_[v]; }
  const VertexSet& neighbors(int v) const { return rows_[v]; }
  std::vector<std::pair<int, int>> edges() const;

 private:
  friend class GraphBuilder;
  int n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<int> degrees_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  void add_edge(int u, int v);
  Graph build() &&;

 private:
  Graph g_;
};

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_parent;  // subgraph vertex -> parent vertex
};

struct DegreeStats {
  int min_degree = 0;
  double average_degree = 0.0;
  int max_degree = 0;
};

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);
Graph complement(const Graph& g);

// |N(v) ∩ s|.
int deg_to(const Graph& g, int v, const VertexSet& s);
// |(N(u) △ N(v)) ∩ s|. The two-argument form counts over all vertices.
int diversity(const Graph& g, int u, int v, const VertexSet& s);
int diversity(const Graph& g, int u, int v);
// Number of distinct degrees in g[s].
int distinct_degree_count(const Graph& g, const VertexSet& s);
// Degrees of each member of s inside g[s], indexed by parent vertex (entries
// outside s are -1).
std::vector<int> induced_degrees(const Graph& g, const VertexSet& s);
DegreeStats degree_stats(const Graph& g);

bool is_diverse(const Graph& g, const VertexSet& u, const VertexSet& s,
                double threshold);
// Smallest pairwise diversity inside s over pairs of u (INT_MAX if |u| < 2).
int min_pairwise_diversity(const Graph& g, const VertexSet& u,
                           const VertexSet& s);
bool is_balanced(const Graph& g, const VertexSet& u, const VertexSet& s,
                 double gamma);
// Smallest gamma with is_balanced(g, u, s, gamma).
double balance(const Graph& g, const VertexSet& u, const VertexSet& s);

}  // namespace degdiv

#endif  // DEGDIV_GRAPH_H_
