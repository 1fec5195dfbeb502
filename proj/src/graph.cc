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

#include <algorithm>
#include <climits>
#include <string>

#include "degdiv/error.h"

namespace degdiv {

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~0ULL;
  if (universe & 63) s.words_.back() = (1ULL << (universe & 63)) - 1;
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) s.insert(v);
  return s;
}

void VertexSet::insert(int v) {
  if (v < 0 || v >= universe_) {
    throw Error(ErrorCode::kInvalidSet,
                "vertex " + std::to_string(v) + " outside universe of size " +
                    std::to_string(universe_));
  }
  words_[v >> 6] |= 1ULL << (v & 63);
}

void VertexSet::erase(int v) {
  if (v < 0 || v >= universe_) return;
  words_[v >> 6] &= ~(1ULL << (v & 63));
}

int VertexSet::size() const {
  int total = 0;
  for (uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](uint64_t w) { return w == 0; });
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (universe_ != other.universe_) {
    throw Error(ErrorCode::kInvalidSet, "vertex sets over different universes");
  }
}

int VertexSet::intersection_size(const VertexSet& other) const {
  check_compatible(other);
  int total = 0;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    total += std::popcount(words_[w] & other.words_[w]);
  }
  return total;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & ~other.words_[w]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] & other.words_[w]) return true;
  }
  return false;
}

VertexSet VertexSet::complement() const { return full(universe_) - *this; }

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

VertexSet VertexSet::lift(std::span<const int> to_parent,
                          int parent_universe) const {
  if (static_cast<int>(to_parent.size()) != universe_) {
    throw Error(ErrorCode::kInvalidSet, "index map does not match universe");
  }
  VertexSet out(parent_universe);
  for_each([&](int v) { out.insert(to_parent[v]); });
  return out;
}

Graph::Graph(int n) : n_(n), rows_(n, VertexSet(n)), degrees_(n, 0) {
  if (n < 0) throw Error(ErrorCode::kInvalidGraph, "negative vertex count");
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

int64_t Graph::edge_count() const {
  int64_t total = 0;
  for (int d : degrees_) total += d;
  return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count());
  for (int u = 0; u < n_; ++u) {
    rows_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  }
  return out;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_) {
    throw Error(ErrorCode::kInvalidGraph,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") out of range");
  }
  if (u == v) {
    throw Error(ErrorCode::kInvalidGraph,
                "self-loop at vertex " + std::to_string(u));
  }
  g_.rows_[u].insert(v);
  g_.rows_[v].insert(u);
}

Graph GraphBuilder::build() && {
  for (int v = 0; v < g_.n_; ++v) g_.degrees_[v] = g_.rows_[v].size();
  return std::move(g_);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) {
    throw Error(ErrorCode::kInvalidSet, "set universe does not match graph");
  }
  InducedSubgraph out;
  out.to_parent = s.members();
  std::vector<int> to_child(g.n(), -1);
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    to_child[out.to_parent[i]] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(out.to_parent.size()));
  for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
    const VertexSet row = g.neighbors(out.to_parent[i]) & s;
    row.for_each([&](int v) {
      if (to_child[v] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), to_child[v]);
    });
  }
  out.graph = std::move(b).build();
  return out;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.n());
  for (int u = 0; u < g.n(); ++u) {
    for (int v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

namespace {

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.n()) {
    throw Error(ErrorCode::kInvalidSet,
                "vertex " + std::to_string(v) + " not in graph");
  }
}

void check_pair(int u, int v) {
  if (u == v) throw Error(ErrorCode::kInvalidPair, "diversity of a vertex with itself");
}

void check_set(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) {
    throw Error(ErrorCode::kInvalidSet, "set universe does not match graph");
  }
}

}  // namespace

int deg_to(const Graph& g, int v, const VertexSet& s) {
  check_vertex(g, v);
  check_set(g, s);
  return g.neighbors(v).intersection_size(s);
}

int diversity(const Graph& g, int u, int v, const VertexSet& s) {
  check_pair(u, v);
  check_vertex(g, u);
  check_vertex(g, v);
  check_set(g, s);
  const auto a = g.neighbors(u).words();
  const auto b = g.neighbors(v).words();
  const auto m = s.words();
  int total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) {
    total += std::popcount((a[w] ^ b[w]) & m[w]);
  }
  return total;
}

int diversity(const Graph& g, int u, int v) {
  check_pair(u, v);
  check_vertex(g, u);
  check_vertex(g, v);
  const auto a = g.neighbors(u).words();
  const auto b = g.neighbors(v).words();
  int total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] ^ b[w]);
  return total;
}

std::vector<int> induced_degrees(const Graph& g, const VertexSet& s) {
  check_set(g, s);
  std::vector<int> deg(g.n(), -1);
  s.for_each([&](int v) { deg[v] = g.neighbors(v).intersection_size(s); });
  return deg;
}

int distinct_degree_count(const Graph& g, const VertexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kInvalidSet, "empty vertex set");
  const std::vector<int> deg = induced_degrees(g, s);
  std::vector<char> seen(g.n() + 1, 0);
  int count = 0;
  for (int d : deg) {
    if (d >= 0 && !seen[d]) {
      seen[d] = 1;
      ++count;
    }
  }
  return count;
}

DegreeStats degree_stats(const Graph& g) {
  if (g.n() == 0) throw Error(ErrorCode::kInvalidGraph, "empty graph");
  DegreeStats st;
  st.min_degree = INT_MAX;
  int64_t total = 0;
  for (int v = 0; v < g.n(); ++v) {
    st.min_degree = std::min(st.min_degree, g.degree(v));
    st.max_degree = std::max(st.max_degree, g.degree(v));
    total += g.degree(v);
  }
  st.average_degree = static_cast<double>(total) / g.n();
  return st;
}

int min_pairwise_diversity(const Graph& g, const VertexSet& u,
                           const VertexSet& s) {
  check_set(g, u);
  check_set(g, s);
  const std::vector<int> m = u.members();
  int best = INT_MAX;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      best = std::min(best, diversity(g, m[i], m[j], s));
    }
  }
  return best;
}

bool is_diverse(const Graph& g, const VertexSet& u, const VertexSet& s,
                double threshold) {
  return min_pairwise_diversity(g, u, s) >= threshold;
}

double balance(const Graph& g, const VertexSet& u, const VertexSet& s) {
  check_set(g, u);
  check_set(g, s);
  if (u.empty()) return 0.0;
  int worst = 0;
  s.for_each([&](int v) {
    worst = std::max(worst, g.neighbors(v).intersection_size(u));
  });
  return static_cast<double>(worst) / u.size();
}

bool is_balanced(const Graph& g, const VertexSet& u, const VertexSet& s,
                 double gamma) {
  check_set(g, u);
  check_set(g, s);
  const int cap = u.size();
  bool ok = true;
  s.for_each([&](int v) {
    if (g.neighbors(v).intersection_size(u) > gamma * cap) ok = false;
  });
  return ok;
}

}  // namespace degdiv
