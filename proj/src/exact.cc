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

#include "degdiv/exact.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "degdiv/error.h"
#include "degdiv/parallel.h"

namespace degdiv {

bool verify_distinct(const Graph& g, const DistinctWitness& w) {
  if (w.S.universe() != g.n() || w.U.universe() != g.n()) return false;
  if (!w.U.is_subset_of(w.S)) return false;
  std::vector<char> seen(g.n() + 1, 0);
  bool ok = true;
  w.U.for_each([&](int u) {
    const int d = g.neighbors(u).intersection_size(w.S);
    if (seen[d]) ok = false;
    seen[d] = 1;
  });
  return ok;
}

void require_distinct(const Graph& g, const DistinctWitness& w) {
  if (!verify_distinct(g, w)) {
    throw Error(ErrorCode::kInvalidWitness,
                "degrees of U in G[S] are not pairwise distinct");
  }
}

DistinctWitness witness_from_set(const Graph& g, const VertexSet& s) {
  const std::vector<int> deg = induced_degrees(g, s);
  std::vector<char> seen(g.n() + 1, 0);
  DistinctWitness w{s, VertexSet(g.n())};
  for (int v = 0; v < g.n(); ++v) {
    if (deg[v] >= 0 && !seen[deg[v]]) {
      seen[deg[v]] = 1;
      w.U.insert(v);
    }
  }
  return w;
}

namespace {

constexpr int kHardFCap = 40;

struct SubsetBest {
  int k = 0;
  uint64_t mask = 0;
  void offer(int k2, uint64_t mask2) {
    if (k2 > k || (k2 == k && k2 > 0 && mask2 < mask)) {
      k = k2;
      mask = mask2;
    }
  }
};

// Gray-code walk over the low `low_bits` vertices with the remaining
// vertices fixed by `prefix`. Degrees and the degree multiset are updated
// per toggle.
class GrayWalker {
 public:
  explicit GrayWalker(const std::vector<std::vector<int>>& adj)
      : adj_(adj), n_(static_cast<int>(adj.size())),
        in_(n_, 0), deg_(n_, 0), count_(n_ + 1, 0) {}

  SubsetBest run(int low_bits, uint64_t prefix) {
    uint64_t mask = 0;
    for (int v = low_bits; v < n_; ++v) {
      if ((prefix >> v) & 1ULL) {
        add(v);
        mask |= 1ULL << v;
      }
    }
    SubsetBest best;
    best.offer(distinct_, mask);
    const uint64_t steps = 1ULL << low_bits;
    for (uint64_t i = 1; i < steps; ++i) {
      const int b = std::countr_zero(i);
      if (in_[b]) {
        remove(b);
      } else {
        add(b);
      }
      mask ^= 1ULL << b;
      best.offer(distinct_, mask);
    }
    return best;
  }

 private:
  void bump(int d, int delta) {
    const int before = count_[d];
    count_[d] += delta;
    if (before == 0 && count_[d] > 0) ++distinct_;
    if (before > 0 && count_[d] == 0) --distinct_;
  }

  void add(int x) {
    for (int y : adj_[x]) {
      if (in_[y]) bump(deg_[y], -1);
      ++deg_[y];
      if (in_[y]) bump(deg_[y], +1);
    }
    in_[x] = 1;
    bump(deg_[x], +1);
  }

  void remove(int x) {
    bump(deg_[x], -1);
    in_[x] = 0;
    for (int y : adj_[x]) {
      if (in_[y]) bump(deg_[y], -1);
      --deg_[y];
      if (in_[y]) bump(deg_[y], +1);
    }
  }

  const std::vector<std::vector<int>>& adj_;
  int n_;
  std::vector<char> in_;
  std::vector<int> deg_;
  std::vector<int> count_;
  int distinct_ = 0;
};

}  // namespace

DistinctWitness exact_f(const Graph& g, int cap, int threads) {
  const int n = g.n();
  if (n > cap || n > kHardFCap) {
    throw Error(ErrorCode::kTooLarge,
                "exact_f supports n <= " + std::to_string(std::min(cap, kHardFCap)) +
                    ", got " + std::to_string(n));
  }
  if (n == 0) return DistinctWitness{VertexSet(0), VertexSet(0)};
  std::vector<std::vector<int>> adj(n);
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v).members();

  const int high_bits = threads > 1 ? std::min(n, 6) : 0;
  const int low_bits = n - high_bits;
  const std::size_t chunks = std::size_t{1} << high_bits;
  std::vector<SubsetBest> results(chunks);
  parallel_for(chunks, threads, [&](std::size_t c) {
    GrayWalker walker(adj);
    results[c] = walker.run(low_bits, static_cast<uint64_t>(c) << low_bits);
  });
  SubsetBest best;
  for (const SubsetBest& r : results) best.offer(r.k, r.mask);

  VertexSet s(n);
  for (int v = 0; v < n; ++v) {
    if ((best.mask >> v) & 1ULL) s.insert(v);
  }
  return witness_from_set(g, s);
}

namespace {

using Bits = std::vector<uint64_t>;

bool any_bit(const Bits& b) {
  return std::any_of(b.begin(), b.end(), [](uint64_t w) { return w != 0; });
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.n()), words_((g.n() + 63) / 64) {
    // Search in degree-descending order; colour classes then tend to be
    // tighter near the root.
    order_.resize(n_);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) {
      return g.degree(a) > g.degree(b);
    });
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[order_[i]] = i;
    adj_.assign(n_, Bits(words_, 0));
    for (int i = 0; i < n_; ++i) {
      g.neighbors(order_[i]).for_each([&](int v) {
        const int j = pos[v];
        adj_[i][j >> 6] |= 1ULL << (j & 63);
      });
    }
  }

  VertexSet solve() {
    Bits all(words_, 0);
    for (int i = 0; i < n_; ++i) all[i >> 6] |= 1ULL << (i & 63);
    if (n_ > 0) expand(all);
    VertexSet out(n_);
    for (int i : best_) out.insert(order_[i]);
    return out;
  }

 private:
  void expand(Bits candidates) {
    std::vector<int> seq;
    std::vector<int> colour;
    colour_sort(candidates, seq, colour);
    for (int idx = static_cast<int>(seq.size()) - 1; idx >= 0; --idx) {
      if (current_.size() + colour[idx] <= best_.size()) return;
      const int v = seq[idx];
      current_.push_back(v);
      Bits next(words_);
      for (int w = 0; w < words_; ++w) next[w] = candidates[w] & adj_[v][w];
      if (any_bit(next)) {
        expand(std::move(next));
      } else if (current_.size() > best_.size()) {
        best_ = current_;
      }
      current_.pop_back();
      candidates[v >> 6] &= ~(1ULL << (v & 63));
    }
  }

  // Greedy sequential colouring; seq is ordered by nondecreasing colour.
  void colour_sort(const Bits& candidates, std::vector<int>& seq,
                   std::vector<int>& colour) const {
    Bits uncoloured = candidates;
    int k = 0;
    while (any_bit(uncoloured)) {
      ++k;
      Bits q = uncoloured;
      for (int w = 0; w < words_; ++w) {
        while (q[w]) {
          const int v = w * 64 + std::countr_zero(q[w]);
          uncoloured[w] &= ~(1ULL << (v & 63));
          for (int x = 0; x < words_; ++x) q[x] &= ~adj_[v][x];
          q[w] &= ~(1ULL << (v & 63));
          seq.push_back(v);
          colour.push_back(k);
        }
      }
    }
  }

  int n_;
  int words_;
  std::vector<int> order_;
  std::vector<Bits> adj_;
  std::vector<int> current_;
  std::vector<int> best_;
};

}  // namespace

VertexSet max_clique(const Graph& g) { return CliqueSearch(g).solve(); }

HomResult exact_hom(const Graph& g, int cap) {
  if (g.n() > cap) {
    throw Error(ErrorCode::kTooLarge,
                "exact_hom supports n <= " + std::to_string(cap) + ", got " +
                    std::to_string(g.n()));
  }
  HomResult r;
  VertexSet clique = max_clique(g);
  VertexSet independent = max_clique(complement(g));
  if (independent.size() > clique.size()) {
    r.value = independent.size();
    r.witness = std::move(independent);
    r.is_clique = false;
  } else {
    r.value = clique.size();
    r.witness = std::move(clique);
  }
  return r;
}

WindowMax max_window_mass(std::span<const double> sorted_values,
                          std::span<const double> mass, double half_width) {
  WindowMax best;
  const std::size_t m = sorted_values.size();
  if (m == 0) return best;
  double scale = 1.0;
  for (double v : {sorted_values.front(), sorted_values.back()}) {
    scale = std::max(scale, std::abs(v));
  }
  const double tol = 1e-9 * scale;
  double inside = 0.0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (j < i) {
      j = i;
      inside = 0.0;
    }
    const double edge = sorted_values[i] + 2.0 * half_width + tol;
    while (j < m && sorted_values[j] <= edge) inside += mass[j++];
    if (inside > best.mass) {
      best.mass = inside;
      best.left = sorted_values[i];
    }
    inside -= mass[i];
  }
  return best;
}

double exact_small_ball(const SmallBallInstance& inst, int cap) {
  const std::size_t n = inst.weights.size();
  if (inst.probs.size() != n) {
    throw Error(ErrorCode::kInvalidParams, "weights and probs differ in length");
  }
  if (static_cast<int>(n) > cap || n > 30) {
    throw Error(ErrorCode::kTooLarge,
                "exact_small_ball supports n <= " + std::to_string(cap));
  }
  if (!(inst.half_width >= 0.0)) {
    throw Error(ErrorCode::kInvalidParams, "window half-width must be >= 0");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (inst.weights[i] == 0.0) throw Error(ErrorCode::kInvalidParams, "zero weight");
    if (!(inst.probs[i] >= 0.1 && inst.probs[i] <= 0.9)) {
      throw Error(ErrorCode::kInvalidParams, "probability outside [0.1, 0.9]");
    }
  }
  const std::size_t atoms = std::size_t{1} << n;
  std::vector<double> value(atoms, 0.0), prob(atoms, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t half = std::size_t{1} << i;
    for (std::size_t m = 0; m < half; ++m) {
      value[m | half] = value[m] + inst.weights[i];
      prob[m | half] = prob[m] * inst.probs[i];
      prob[m] *= 1.0 - inst.probs[i];
    }
  }
  std::vector<uint32_t> idx(atoms);
  std::iota(idx.begin(), idx.end(), 0u);
  std::sort(idx.begin(), idx.end(), [&](uint32_t a, uint32_t b) {
    return value[a] < value[b] || (value[a] == value[b] && a < b);
  });
  std::vector<double> sorted_value(atoms), sorted_prob(atoms);
  for (std::size_t i = 0; i < atoms; ++i) {
    sorted_value[i] = value[idx[i]];
    sorted_prob[i] = prob[idx[i]];
  }
  return std::min(1.0, max_window_mass(sorted_value, sorted_prob, inst.half_width).mass);
}

double lo_reference(int n) {
  if (n < 0) throw Error(ErrorCode::kInvalidParams, "n must be >= 0");
  if (n <= 60) {
    uint64_t c = 1;
    const int k = n / 2;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return std::ldexp(static_cast<double>(c), -n);
  }
  const double log_c = std::lgamma(n + 1.0) - std::lgamma(n / 2 + 1.0) -
                       std::lgamma(n - n / 2 + 1.0);
  return std::exp(log_c - n * std::log(2.0));
}

}  // namespace degdiv
