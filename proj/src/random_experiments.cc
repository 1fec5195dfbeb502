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

#include "degdiv/random_experiments.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "degdiv/error.h"
#include "degdiv/exact.h"
#include "degdiv/generators.h"

namespace degdiv {

namespace gc = gnp_constants;

int convenient_target(int n, double p) {
  const double x = std::cbrt(p * n * static_cast<double>(n)) / gc::kTargetDivisor;
  return static_cast<int>(std::floor(x + 1e-9));
}

bool verify_convenient(const Graph& g, const ConvenientWitness& w) {
  const int n = g.n();
  if (w.U.universe() != n || w.W.universe() != n) return false;
  if (w.U.empty() || w.U.intersects(w.W)) return false;
  const double pn = w.p * n;
  bool ok = true;
  w.U.for_each([&](int u) {
    if (g.degree(u) > gc::kCandidateDegree * pn) ok = false;
  });
  const double back = gc::kBackDegree * w.p * w.U.size();
  w.W.for_each([&](int v) {
    if (deg_to(g, v, w.U) > back) ok = false;
  });
  return ok && (w.U.size() < 2 ||
                is_diverse(g, w.U, w.W, pn / gc::kDiversityDivisor));
}

ConvenientWitness p_convenient_set(const Graph& g, double p, int target) {
  const int n = g.n();
  if (!(p > 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::kInvalidParams, "p must lie in (0, 1]");
  }
  const double four = 4.0 * target;
  if (target < 1 || four < std::sqrt(static_cast<double>(n)) - 1e-9 ||
      four > p * n + 1e-9) {
    throw Error(ErrorCode::kInvalidParams,
                "need sqrt(n) <= 4*target <= pn, got target " +
                    std::to_string(target));
  }
  const double pn = p * n;
  ConvenientWitness w{VertexSet(n), VertexSet(n), p};
  for (int v = 0; v < n && w.U.size() < target; ++v) {
    if (g.degree(v) <= gc::kCandidateDegree * pn) w.U.insert(v);
  }
  if (w.U.size() < target) {
    throw Error(ErrorCode::kNotConvenient, "too few vertices of degree <= 2pn");
  }
  const double back = gc::kBackDegree * p * target;
  for (int v = 0; v < n; ++v) {
    if (!w.U.contains(v) && deg_to(g, v, w.U) < back) w.W.insert(v);
  }
  if (!verify_convenient(g, w)) {
    throw Error(ErrorCode::kNotConvenient, "U is not pn/3-diverse to W");
  }
  return w;
}

double gnp_blend_width(int u_size, double p, int n) {
  return std::min(0.4, u_size / (gc::kBlendDivisor * p * n));
}

SeparatedWitness gnp_separate(const Graph& g, const ConvenientWitness& w, Rng& rng,
                              int attempts) {
  const int n = g.n();
  if (!verify_convenient(g, w)) {
    throw Error(ErrorCode::kNotConvenient, "witness fails re-verification");
  }
  const std::vector<int> us = w.U.members();
  const int m = static_cast<int>(us.size());
  if (m < 2) throw Error(ErrorCode::kSeparationFailed, "need |U| >= 2");
  const double beta = gnp_blend_width(m, w.p, n);

  // N(u) ∩ W for each u, reused by every attempt.
  std::vector<std::vector<int>> nbr_w(m);
  for (int i = 0; i < m; ++i) nbr_w[i] = (g.neighbors(us[i]) & w.W).members();

  SeparatedWitness best;
  bool have = false;
  std::vector<double> raw(n);
  std::vector<double> alpha(m);
  for (int a = 0; a < std::max(1, attempts); ++a) {
    for (double& x : alpha) x = rng.uniform(-beta, beta);
    std::fill(raw.begin(), raw.end(), 0.5);
    for (int i = 0; i < m; ++i) {
      for (int v : nbr_w[i]) raw[v] += alpha[i];
    }
    std::vector<int> good;
    for (int i = 0; i < m; ++i) {
      int outliers = 0;
      for (int v : nbr_w[i]) {
        const double q = raw[v] - alpha[i];
        if (q < gc::kInnerLow || q > gc::kInnerHigh) ++outliers;
      }
      if (outliers <= gc::kOutlierShare * nbr_w[i].size()) good.push_back(us[i]);
    }
    ProbVector p{VertexSet::full(n), std::vector<double>(n, 0.5)};
    w.W.for_each([&](int v) { p.values[v] = std::clamp(raw[v], kProbFloor, kProbCeil); });
    w.U.for_each([&](int u) { p.values[u] = 1.0; });

    const int gs = static_cast<int>(good.size());
    std::vector<double> e(gs);
    for (int i = 0; i < gs; ++i) e[i] = expected_degree(g, p, good[i], p.domain);
    GraphBuilder b(gs);
    int64_t edges = 0;
    for (int i = 0; i < gs; ++i) {
      for (int j = i + 1; j < gs; ++j) {
        if (std::abs(e[i] - e[j]) <= 1.0) {
          b.add_edge(i, j);
          ++edges;
        }
      }
    }
    if (gs < gc::kGoodShare * m || edges > gc::kCollisionEdges * m) continue;
    const Graph close = std::move(b).build();
    VertexSet kept(n);
    turan_independent_set(close).for_each([&](int i) { kept.insert(good[i]); });
    if (!have || kept.size() > best.U.size()) {
      best = SeparatedWitness{std::move(p), std::move(kept), 1.0};
      have = true;
    }
  }
  if (!have) {
    throw Error(ErrorCode::kSeparationFailed, "no attempt met the acceptance test");
  }
  if (best.U.size() < 2) {
    throw Error(ErrorCode::kSeparationFailed, "fewer than two separated vertices");
  }
  if (!is_separated(g, best.p, best.U, best.gap)) {
    throw Error(ErrorCode::kSeparationFailed, "separation recheck failed");
  }
  return best;
}

DistinctWitness gnp_realize(const Graph& g, const SeparatedWitness& w, double p,
                            Rng& rng, int attempts) {
  const int n = g.n();
  const std::vector<int> us = w.U.members();
  const int m = static_cast<int>(us.size());
  if (m == 0) throw Error(ErrorCode::kInvalidWitness, "empty separated set");
  if (m == 1) {
    return DistinctWitness{VertexSet::of(n, {us[0]}), VertexSet::of(n, {us[0]})};
  }
  std::vector<double> e(m);
  for (int i = 0; i < m; ++i) e[i] = expected_degree(g, w.p, us[i], w.p.domain);
  const double window = std::sqrt(gc::kDegreeWindow * p * n);
  const double pair_window = gc::kPairWindow * window;

  DistinctWitness best{VertexSet(n), VertexSet(n)};
  for (int a = 0; a < std::max(1, attempts); ++a) {
    VertexSet s(n);
    w.p.domain.for_each([&](int v) {
      if (rng.uniform() < w.p[v]) s.insert(v);
    });
    std::vector<int> in_b;
    std::vector<int> deg;
    for (int i = 0; i < m; ++i) {
      if (!s.contains(us[i])) continue;
      const int d = deg_to(g, us[i], s);
      if (std::abs(d - e[i]) <= window) {
        in_b.push_back(i);
        deg.push_back(d);
      }
    }
    const int bs = static_cast<int>(in_b.size());
    GraphBuilder b(bs);
    for (int x = 0; x < bs; ++x) {
      for (int y = x + 1; y < bs; ++y) {
        if (deg[x] == deg[y] && std::abs(e[in_b[x]] - e[in_b[y]]) <= pair_window) {
          b.add_edge(x, y);
        }
      }
    }
    const Graph collisions = std::move(b).build();
    VertexSet kept(n);
    turan_independent_set(collisions).for_each([&](int x) { kept.insert(us[in_b[x]]); });
    if (kept.size() > best.U.size()) best = DistinctWitness{std::move(s), std::move(kept)};
  }
  if (best.U.empty()) {
    throw Error(ErrorCode::kRealizationFailed, "no sample kept a vertex near its mean");
  }
  require_distinct(g, best);
  return best;
}

namespace {

// Neighbours of u outside U and outside every other member's neighbourhood.
VertexSet private_neighbours(const Graph& g, const VertexSet& u, int x) {
  VertexSet out = g.neighbors(x) - u;
  u.for_each([&](int y) {
    if (y != x) out -= g.neighbors(y);
  });
  return out;
}

}  // namespace

bool has_private_neighbours(const Graph& g, const VertexSet& u) {
  const int k = u.size();
  bool ok = true;
  u.for_each([&](int x) {
    if (ok && private_neighbours(g, u, x).size() < k) ok = false;
  });
  return ok;
}

DistinctWitness sparse_distinct(const Graph& g, const VertexSet& u) {
  if (u.empty()) throw Error(ErrorCode::kInvalidSet, "empty vertex set");
  if (!has_private_neighbours(g, u)) {
    throw Error(ErrorCode::kNotPrivate, "some vertex has fewer than |U| private neighbours");
  }
  std::vector<int> order = u.members();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return deg_to(g, a, u) < deg_to(g, b, u);
  });
  VertexSet s = u;
  for (std::size_t i = 0; i < order.size(); ++i) {
    int need = static_cast<int>(i) + 1;
    private_neighbours(g, u, order[i]).for_each([&](int v) {
      if (need > 0) {
        s.insert(v);
        --need;
      }
    });
  }
  DistinctWitness w{s, u};
  require_distinct(g, w);
  return w;
}

SparseChoice sparse_candidates(const Graph& g, double p, double factor) {
  const int n = g.n();
  SparseChoice best{VertexSet(n), "none"};
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  int k = 0;
  while (k < n && g.degree(order[k]) >= factor * (k + 1)) ++k;
  for (; k >= 1; --k) {
    VertexSet u = VertexSet::of(n, std::span<const int>(order.data(), k));
    if (has_private_neighbours(g, u)) {
      best = SparseChoice{std::move(u), "high_degree"};
      break;
    }
  }
  const int fixed = static_cast<int>(
      std::floor(p * n / gc::kSparseFixedDivisor + 1e-9));
  if (fixed >= 2 && fixed > best.U.size() && fixed <= n) {
    VertexSet u(n);
    for (int v = 0; v < fixed; ++v) u.insert(v);
    if (has_private_neighbours(g, u)) best = SparseChoice{std::move(u), "fixed"};
  }
  if (best.U.empty() && n > 0) best = SparseChoice{VertexSet::of(n, {order[0]}), "single"};
  return best;
}

int upper_bound_ceiling(int n, double p) {
  const double c = gc::kCeilingFactor * std::cbrt(p * n * static_cast<double>(n));
  return std::max(1, static_cast<int>(std::floor(c + 1e-9)));
}

int upper_bound_probe(const Graph& g, double p) { return upper_bound_ceiling(g.n(), p); }

HomCheck hom_gnp_check(int n, double p, int seeds, uint64_t base_seed) {
  if (n > kDefaultHomCap) {
    throw Error(ErrorCode::kTooLarge, "hom check limited to n <= 60");
  }
  if (!(p > 0.0 && p <= 0.5) || n < 2) {
    throw Error(ErrorCode::kInvalidParams, "need n >= 2 and 0 < p <= 1/2");
  }
  HomCheck out;
  out.bound = gc::kHomFactor * std::log(static_cast<double>(n)) / p;
  for (int i = 0; i < seeds; ++i) {
    const Graph g = gnp(n, p, hash3(base_seed, static_cast<uint64_t>(n), i));
    if (exact_hom(g).value <= out.bound) ++out.passed;
    ++out.total;
  }
  out.ok = out.total > 0 && out.passed >= 0.95 * out.total;
  return out;
}

GnpOutcome run_gnp_pipeline(const Graph& g, double p, bool sparse,
                            const GnpPipelineConfig& cfg, Rng& rng) {
  const int n = g.n();
  GnpOutcome out{DistinctWitness{VertexSet::of(n, {0}), VertexSet::of(n, {0})},
                 "", false, 0, 0};
  try {
    if (sparse) {
      SparseChoice c = sparse_candidates(g, p, cfg.private_degree);
      out.stage_size = c.U.size();
      out.witness = sparse_distinct(g, c.U);
      out.method = "sparse:" + c.rule;
    } else {
      const int target = static_cast<int>(std::floor(
          std::cbrt(p * n * static_cast<double>(n)) / cfg.target_divisor + 1e-9));
      ConvenientWitness cw = p_convenient_set(g, p, target);
      out.stage_size = cw.U.size();
      SeparatedWitness sep = gnp_separate(g, cw, rng, cfg.separate_attempts);
      out.separated = sep.U.size();
      out.witness = gnp_realize(g, sep, p, rng, cfg.realize_attempts);
      out.method = "dense";
    }
    out.ok = true;
  } catch (const Error& e) {
    out.method = "failed:" + std::string(error_code_name(e.code()));
  }
  return out;
}

}  // namespace degdiv
