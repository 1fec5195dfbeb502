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

#include "degdiv/construct.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "degdiv/parallel.h"
#include "degdiv/pipeline.h"

namespace degdiv {

PipelineConfig PipelineConfig::asymptotic() {
  PipelineConfig c;
  c.mid_degree_coeff = 10.0;
  c.leaf_k = 4.0;
  c.dense_branch = true;
  return c;
}

PipelineConfig PipelineConfig::desk() {
  PipelineConfig c;
  c.control_set_coeff = 0.25;
  c.case1_keep_coeff = 1.0;
  return c;
}

namespace {

// A result over the vertex set of some subgraph. `dist` need not cover every
// vertex; the top level fills the rest with the trivial distribution.
struct Local {
  VertexSet U;
  Distribution dist;
  std::string route;
};

Local lift(const Local& r, const std::vector<int>& to_parent, int parent_n) {
  return Local{r.U.lift(to_parent, parent_n), r.dist.lift(to_parent, parent_n),
               r.route};
}

int ceil_k(double k) { return std::max(1, static_cast<int>(std::ceil(k - 1e-9))); }

double log2_sq(double k) {
  const double l = std::log2(k + 1.0);
  return l * l;
}

class Builder {
 public:
  Builder(const PipelineConfig& cfg, Rng& rng) : cfg_(cfg), rng_(rng) {}

  std::optional<Local> build(const Graph& h, double k, int depth) {
    const int n = h.n();
    if (n == 0 || depth > cfg_.max_depth) return std::nullopt;
    if (k <= cfg_.leaf_k || n <= 2) return leaf(h, k);
    const int kc = ceil_k(k);

    // Step 0: greedy diverse set.
    const double tau = cfg_.diverse_coeff * std::pow(kc, 1.5);
    std::vector<int> centers = diverse_centers(h, tau, kc + 1);
    if (static_cast<int>(centers.size()) >= kc + 1) {
      VertexSet u = VertexSet::of(n, centers);
      try {
        return Local{u, diverse_blended(h, u, kc), "diverse"};
      } catch (const Error&) {
        // Threshold configured below the blending requirement; go on.
      }
    }

    const bool dense = dense_regime(n, k);
    const double band = dense ? n * std::pow(k, -1.0 / 3.0)
                              : cfg_.mid_degree_coeff * std::pow(k, 1.5);

    // Case II: a large cluster around a mid-degree centre.
    for (int c : centers) {
      const int d = h.degree(c);
      if (d < band || d > n - 1 - band) continue;
      std::vector<int> cluster;
      for (int v = 0; v < n; ++v) {
        if (v == c || diversity(h, v, c) < tau) cluster.push_back(v);
      }
      if (cluster.size() < cfg_.cluster_factor * k) continue;
      if (auto r = case_two(h, k, kc, c, cluster, depth)) return r;
      break;
    }
    return case_one(h, k, kc, band, dense, depth);
  }

 private:
  bool dense_regime(int n, double k) const {
    return cfg_.dense_branch && n < cfg_.dense_threshold * std::pow(k, 2.5);
  }

  // min(n, kc+1) vertices spread over the degree order, so that the trivial
  // distribution already separates them as well as it can.
  Local leaf(const Graph& h, double k) {
    const int n = h.n();
    const int want = std::min(n, std::max(2, ceil_k(k) + 1));
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) < h.degree(b); });
    VertexSet u(n);
    for (int i = 0; i < want; ++i) {
      const int pos = want == 1 ? 0 : static_cast<int>(
          std::llround(static_cast<double>(i) * (n - 1) / (want - 1)));
      u.insert(order[pos]);
    }
    return Local{u, Distribution::trivial(VertexSet(n)), "leaf"};
  }

  // Greedy farthest-point search: repeatedly add the vertex whose smallest
  // distance to the chosen set is largest, while that distance is >= tau.
  static std::vector<int> diverse_centers(const Graph& h, double tau, int limit) {
    const int n = h.n();
    std::vector<int> chosen{0};
    std::vector<int> dist(n, std::numeric_limits<int>::max());
    while (static_cast<int>(chosen.size()) < limit) {
      const int last = chosen.back();
      dist[last] = -1;
      int best = -1;
      for (int v = 0; v < n; ++v) {
        if (dist[v] < 0) continue;
        dist[v] = std::min(dist[v], diversity(h, v, last));
        if (best < 0 || dist[v] > dist[best]) best = v;
      }
      if (best < 0 || dist[best] < tau) break;
      chosen.push_back(best);
    }
    return chosen;
  }

  std::optional<Local> case_two(const Graph& h, double k, int kc, int centre,
                                const std::vector<int>& cluster, int depth) {
    const int n = h.n();
    const int size = static_cast<int>(std::ceil(cfg_.cluster_factor * k - 1e-9));
    VertexSet vset = VertexSet::of(n, {centre});
    for (int v : cluster) {
      if (vset.size() >= size) break;
      vset.insert(v);
    }
    const VertexSet& nc = h.neighbors(centre);
    VertexSet y1(n), y2(n);
    for (int x = 0; x < n; ++x) {
      if (vset.contains(x)) continue;
      const int dv = deg_to(h, x, vset);
      if (nc.contains(x)) {
        if (dv >= cfg_.high_split * k) y1.insert(x);
      } else if (dv <= cfg_.low_split * k) {
        y2.insert(x);
      }
    }
    std::optional<Local> parts[2];
    const VertexSet* ys[2] = {&y1, &y2};
    for (int i = 0; i < 2; ++i) {
      if (ys[i]->empty()) continue;
      InducedSubgraph sub = induced_subgraph(h, *ys[i]);
      const double ki = k * ys[i]->size() / n;
      if (auto r = build(sub.graph, ki, depth + 1)) {
        parts[i] = lift(*r, sub.to_parent, n);
      }
    }
    for (auto& p : parts) {
      if (p && p->U.size() >= kc + 1) return std::move(p);
    }
    if (!parts[0] && !parts[1]) return std::nullopt;
    std::vector<Distribution> factors{Distribution::uniform_constant(vset)};
    VertexSet u(n);
    std::string route = "II(";
    for (int i = 0; i < 2; ++i) {
      if (i) route += ",";
      if (!parts[i]) {
        route += "-";
        continue;
      }
      u |= parts[i]->U;
      if (!parts[i]->dist.domain().empty()) factors.push_back(parts[i]->dist);
      route += parts[i]->route;
    }
    route += ")";
    return Local{u, Distribution::product(std::move(factors)), route};
  }

  std::optional<Local> case_one(const Graph& h, double k, int kc, double band,
                                bool dense, int depth) {
    const int n = h.n();
    const double thr = band + cfg_.diverse_coeff * std::pow(k, 1.5);
    VertexSet low(n), high(n);
    for (int v = 0; v < n; ++v) {
      if (h.degree(v) <= thr) low.insert(v);
      if (h.degree(v) >= n - 1 - thr) high.insert(v);
    }
    const bool g_first = low.size() >= high.size();
    for (int pass = 0; pass < 2; ++pass) {
      const bool use_g = (pass == 0) == g_first;
      const VertexSet& side = use_g ? low : high;
      if (side.size() < 2) continue;
      InducedSubgraph sub = induced_subgraph(h, side);
      const Graph work = use_g ? sub.graph : complement(sub.graph);
      const std::string tag = use_g ? "I:" : "I~:";
      // Blended factors read neighbourhoods of the graph they are sampled
      // on, so the dense branch only runs on the uncomplemented side.
      if (dense && use_g) {
        if (auto r = dense_branch(work, k, depth)) {
          r->route = tag + r->route;
          return lift(*r, sub.to_parent, n);
        }
      }
      for (int kp = kc; kp >= 1; --kp) {
        try {
          BoundedDegreeResult b = bounded_degree_construct(work, kp);
          Local r{b.U, b.dist, tag + "bounded"};
          return lift(r, sub.to_parent, n);
        } catch (const InsufficientDegreeError&) {
        }
      }
    }
    return std::nullopt;
  }

  std::optional<Local> dense_branch(const Graph& f, double k, int depth) {
    if (f.n() < 2) return std::nullopt;
    InducedSubgraph reg = regularize(f);
    const Graph& h = reg.graph;
    const int m = h.n();
    if (m < 2 || h.edge_count() == 0) return std::nullopt;
    const Graph j = diversity_graph(h, cfg_.epsilon);
    VertexSet s1(m), s2(m);
    for (int v = 0; v < m; ++v) {
      (j.degree(v) <= m / (cfg_.s1_factor * k) ? s1 : s2).insert(v);
    }
    std::optional<Local> r = 2 * s1.size() >= m
                                 ? dense_sparse_cluster(h, j, s1, k, f.n())
                                 : dense_clustered(h, j, s2, k, depth);
    if (!r) return std::nullopt;
    return lift(*r, reg.to_parent, f.n());
  }

  // Few diversity-graph neighbours: random W, independent set of J[W],
  // blended distribution over V(H).
  std::optional<Local> dense_sparse_cluster(const Graph& h, const Graph& j,
                                            const VertexSet& s1, double k,
                                            int n_outer) {
    const int m = h.n();
    const double q = std::min(1.0, 8.0 * k / s1.size());
    const int cap = 2 * ceil_k(k) + 1;
    std::vector<int> best;
    for (int r = 0; r < std::max(1, cfg_.w_retries); ++r) {
      VertexSet w(m);
      s1.for_each([&](int v) {
        if (rng_.bernoulli(q)) w.insert(v);
      });
      if (w.size() < 2) continue;
      InducedSubgraph jw = induced_subgraph(j, w);
      std::vector<int> u0;
      turan_independent_set(jw.graph).for_each([&](int i) {
        if (static_cast<int>(u0.size()) < cap) u0.push_back(jw.to_parent[i]);
      });
      if (u0.size() > best.size()) best = std::move(u0);
      if (static_cast<int>(best.size()) >= cap) break;
    }
    if (best.size() < 2) return std::nullopt;
    const DegreeStats st = degree_stats(h);
    const double log_n = std::log2(std::max(2, n_outer));
    const double m_delta = std::max(1.0, 240.0 * st.max_degree * k / n_outer);
    const double beta = std::min(0.4, 1.0 / (10.0 * log_n * std::sqrt(m_delta)));
    const int keep = std::clamp(
        static_cast<int>(std::ceil(cfg_.case1_keep_coeff * k / log2_sq(k))), 2,
        static_cast<int>(best.size()));
    VertexSet u0 = VertexSet::of(m, best);
    VertexSet u = VertexSet::of(m, std::span<const int>(best.data(), keep));
    return Local{u, Distribution::blended(u0, VertexSet::full(m), beta),
                 "dense1"};
  }

  // Many diversity-graph neighbours: clusters S_w around sparse random
  // centres, control sets T_w from J-neighbourhoods, recursion inside each
  // cleaned cluster.
  std::optional<Local> dense_clustered(const Graph& h, const Graph& j,
                                       const VertexSet& s2, double k, int depth) {
    const int m = h.n();
    const int delta = std::max(1, degree_stats(h).max_degree);
    const double q = 1.0 / (8.0 * delta);
    std::vector<int> centres;
    std::vector<VertexSet> clusters;
    for (int r = 0; r < std::max(1, cfg_.w_retries); ++r) {
      VertexSet w0(m);
      s2.for_each([&](int v) {
        if (rng_.bernoulli(q)) w0.insert(v);
      });
      std::vector<int> cand;
      std::vector<VertexSet> cs;
      w0.for_each([&](int w) {
        VertexSet sw(m);
        h.neighbors(w).for_each([&](int v) {
          if (h.neighbors(v).intersection_size(w0) == 1) sw.insert(v);
        });
        if (2 * sw.size() >= h.degree(w) && !sw.empty()) {
          cand.push_back(w);
          cs.push_back(std::move(sw));
        }
      });
      if (cand.size() > centres.size()) {
        centres = std::move(cand);
        clusters = std::move(cs);
      }
    }
    if (centres.empty()) return std::nullopt;

    const int t = std::max(
        1, static_cast<int>(std::floor(cfg_.control_set_coeff * k / log2_sq(k))));
    VertexSet used(m);
    std::vector<VertexSet> controls;
    std::vector<int> live;
    for (std::size_t i = 0; i < centres.size(); ++i) {
      VertexSet tw(m);
      j.neighbors(centres[i]).for_each([&](int v) {
        if (tw.size() < t && !used.contains(v)) tw.insert(v);
      });
      if (tw.size() < t) continue;
      used |= tw;
      controls.push_back(std::move(tw));
      live.push_back(static_cast<int>(i));
    }
    if (live.empty()) return std::nullopt;

    VertexSet all_s(m), all_t(m), centre_set(m);
    for (int i : live) {
      all_s |= clusters[i];
      centre_set.insert(centres[i]);
    }
    for (const VertexSet& tw : controls) all_t |= tw;
    VertexSet strip = all_t | centre_set;
    for (std::size_t a = 0; a < live.size(); ++a) {
      const VertexSet& sw = clusters[live[a]];
      const VertexSet& tw = controls[a];
      const VertexSet others = all_s - sw;
      sw.for_each([&](int v) {
        if (3 * deg_to(h, v, tw) <= 2 * t) strip.insert(v);
      });
      others.for_each([&](int v) {
        if (3 * deg_to(h, v, tw) >= t) strip.insert(v);
      });
    }

    struct Piece {
      Local local;
      int index;
    };
    std::vector<Piece> pieces;
    for (std::size_t a = 0; a < live.size(); ++a) {
      const VertexSet sp = clusters[live[a]] - strip;
      if (sp.size() < 2) continue;
      InducedSubgraph sub = induced_subgraph(h, sp);
      const double kw = sp.size() * k / m;
      if (auto r = build(sub.graph, kw, depth + 1)) {
        pieces.push_back({lift(*r, sub.to_parent, m), static_cast<int>(a)});
      }
    }
    if (pieces.empty()) return std::nullopt;
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
      return a.local.U.size() > b.local.U.size();
    });
    VertexSet u(m);
    std::vector<Distribution> factors;
    std::string route = "dense2(";
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      if (i > 0 && 9.0 * u.size() >= t) break;
      u |= pieces[i].local.U;
      if (!pieces[i].local.dist.domain().empty()) {
        factors.push_back(pieces[i].local.dist);
      }
      factors.push_back(Distribution::uniform_constant(controls[pieces[i].index]));
      route += (i ? "," : "") + pieces[i].local.route;
    }
    route += ")";
    return Local{u, Distribution::product(std::move(factors)), route};
  }

  const PipelineConfig& cfg_;
  Rng& rng_;
};

}  // namespace

Construction nt_construct(const Graph& g, double k, const PipelineConfig& cfg,
                          Rng& rng) {
  if (!(k >= 1.0)) throw Error(ErrorCode::kInvalidParams, "k must be at least 1");
  if (g.n() == 0) throw Error(ErrorCode::kInvalidGraph, "empty graph");
  Builder builder(cfg, rng);
  std::optional<Local> r = builder.build(g, k, 0);
  auto fallback = [&] {
    PipelineConfig leaf_cfg = cfg;
    leaf_cfg.leaf_k = std::numeric_limits<double>::infinity();
    Builder b(leaf_cfg, rng);
    Local l = *b.build(g, 1.0, 0);
    return Construction{l.U, Distribution::with_trivial_rest(l.dist), "fallback",
                        -1.0};
  };
  if (!r) {
    throw ConstructionFailed("every branch failed for k=" + std::to_string(k),
                             fallback());
  }
  Construction out{r->U, Distribution::with_trivial_rest(r->dist), r->route, -1.0};
  if (out.U.empty()) throw ConstructionFailed("empty set", fallback());
  const int size = out.U.size();
  out.bad = bad_sum(out.dist, g, out.U, VertexSet::full(g.n()), cfg.bad_trials, rng,
                    cfg.window);
  const double limit = cfg.bad_slack * size * std::log2(size + 1.0);
  if (out.bad > limit) {
    throw ConstructionFailed("estimated bad " + std::to_string(out.bad) +
                                 " exceeds " + std::to_string(limit),
                             std::move(out));
  }
  return out;
}

DistinctWitness greedy_distinct(const Graph& g, int restarts, Rng& rng) {
  const int n = g.n();
  if (n == 0) throw Error(ErrorCode::kInvalidGraph, "empty graph");
  DistinctWitness best = witness_from_set(g, VertexSet::full(n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int r = 0; r < std::max(1, restarts); ++r) {
    VertexSet s = VertexSet::full(n);
    if (r > 0) {
      for (int v = 0; v < n; ++v) {
        if (rng.bernoulli(0.5)) s.erase(v);
      }
      if (s.empty()) s.insert(static_cast<int>(rng.below(n)));
    }
    std::vector<int> deg(n, 0), hist(n + 1, 0);
    int distinct = 0, members = s.size();
    auto bump = [&](int d, int by) {
      if (by > 0 && hist[d]++ == 0) ++distinct;
      if (by < 0 && --hist[d] == 0) --distinct;
    };
    s.for_each([&](int v) {
      deg[v] = deg_to(g, v, s);
      bump(deg[v], 1);
    });
    // Toggles v in or out of s, keeping deg/hist/distinct current.
    auto toggle = [&](int v) {
      const bool in = s.contains(v);
      const int step = in ? -1 : 1;
      if (in) {
        bump(deg[v], -1);
        s.erase(v);
        --members;
      }
      g.neighbors(v).for_each([&](int x) {
        if (!s.contains(x)) return;
        bump(deg[x], -1);
        deg[x] += step;
        bump(deg[x], 1);
      });
      if (!in) {
        s.insert(v);
        ++members;
        deg[v] = deg_to(g, v, s);
        bump(deg[v], 1);
      }
    };
    for (bool improved = true; improved;) {
      improved = false;
      std::shuffle(order.begin(), order.end(), rng);
      for (int v : order) {
        if (members == 1 && s.contains(v)) continue;
        const int before = distinct;
        toggle(v);
        if (distinct > before) {
          improved = true;
        } else {
          toggle(v);
        }
      }
    }
    if (distinct > best.k()) best = witness_from_set(g, s);
  }
  require_distinct(g, best);
  return best;
}

FindResult find_distinct_degrees(const Graph& g, const PipelineConfig& cfg,
                                 Rng& rng, int threads) {
  const int n = g.n();
  if (n == 0) throw Error(ErrorCode::kInvalidGraph, "empty graph");
  std::vector<double> ladder = cfg.k_ladder;
  if (ladder.empty()) {
    for (double k = 1; k <= std::max(1, n / 2); k *= 2) ladder.push_back(k);
  }
  const Rng base(rng());
  std::vector<std::optional<DistinctWitness>> slots(ladder.size());
  parallel_for(ladder.size(), threads, [&](std::size_t i) {
    Rng r = base.split(i);
    try {
      Construction c = nt_construct(g, ladder[i], cfg, r);
      if (c.U.size() < 2) {
        slots[i] = DistinctWitness{c.U, c.U};
        return;
      }
      SeparatedWitness sep =
          bad_to_separated(g, c.dist, c.U, cfg.separate_attempts, r);
      if (sep.U.size() < 2) {
        slots[i] = DistinctWitness{sep.U, sep.U};
        return;
      }
      slots[i] = separated_to_distinct(g, sep, cfg.distinct_attempts, r);
    } catch (const Error&) {
      // A failed rung only means this k is out of reach.
    }
  });
  FindResult best{DistinctWitness{VertexSet::of(n, {0}), VertexSet::of(n, {0})},
                  "nt_construct", 0.0};
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i] && slots[i]->k() > best.witness.k()) {
      best = FindResult{*slots[i], "nt_construct", ladder[i]};
    }
  }
  if (cfg.greedy_fallback) {
    Rng r = base.split(ladder.size());
    DistinctWitness gw = greedy_distinct(g, cfg.greedy_restarts, r);
    if (gw.k() > best.witness.k()) best = FindResult{gw, "greedy", 0.0};
  }
  require_distinct(g, best.witness);
  return best;
}

}  // namespace degdiv
