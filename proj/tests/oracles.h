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

// Brute-force reference implementations used only by the tests. They work on
// a plain adjacency matrix and share no code with the library algorithms.

#ifndef DEGDIV_TESTS_ORACLES_H_
#define DEGDIV_TESTS_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <utility>
#include <vector>

#include "degdiv/graph.h"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const degdiv::Graph& g) {
  Matrix m(g.n(), std::vector<bool>(g.n(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline Matrix complement_of(const Matrix& m) {
  Matrix c = m;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) c[i][j] = i != j && !m[i][j];
  }
  return c;
}

// Degree of v inside the subset `mask`.
inline int degree_in(const Matrix& m, uint32_t mask, int v) {
  int d = 0;
  for (std::size_t u = 0; u < m.size(); ++u) {
    if ((mask >> u) & 1U) d += m[v][u];
  }
  return d;
}

// max over nonempty S of the number of distinct degrees in G[S].
inline int f(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int best = n > 0 ? 1 : 0;
  for (uint32_t mask = 1; mask < (1U << n); ++mask) {
    std::set<int> seen;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1U) seen.insert(degree_in(m, mask, v));
    }
    best = std::max<int>(best, static_cast<int>(seen.size()));
  }
  return best;
}

// Largest clique or independent set, by subset enumeration.
inline int hom(const Matrix& m) {
  const int n = static_cast<int>(m.size());
  int best = 0;
  for (uint32_t mask = 1; mask < (1U << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    bool clique = true, indep = true;
    for (int a = 0; a < n && (clique || indep); ++a) {
      if (!((mask >> a) & 1U)) continue;
      for (int b = a + 1; b < n; ++b) {
        if (!((mask >> b) & 1U)) continue;
        if (m[a][b]) indep = false; else clique = false;
      }
    }
    if (clique || indep) best = size;
  }
  return best;
}

// max_c P(|sum a_i X_i - c| <= w), by listing atoms and trying every atom as
// the left end of the window.
inline double small_ball(const std::vector<double>& a, const std::vector<double>& p,
                         double w) {
  std::vector<std::pair<double, double>> atoms{{0.0, 1.0}};
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::pair<double, double>> next;
    for (auto [x, q] : atoms) {
      next.push_back({x, q * (1 - p[i])});
      next.push_back({x + a[i], q * p[i]});
    }
    atoms = std::move(next);
  }
  double best = 0;
  for (auto [left, unused] : atoms) {
    double mass = 0;
    for (auto [x, q] : atoms) {
      if (x >= left - 1e-9 && x <= left + 2 * w + 1e-9) mass += q;
    }
    best = std::max(best, mass);
  }
  return best;
}

// C(n, floor(n/2)) / 2^n via Pascal's triangle.
inline double central_binomial_mass(int n) {
  std::vector<double> row{1.0};
  for (int i = 0; i < n; ++i) {
    std::vector<double> next(row.size() + 1, 0.0);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] += row[j] / 2;
      next[j + 1] += row[j] / 2;
    }
    row = std::move(next);
  }
  return row[n / 2];
}

}  // namespace oracle

#endif  // DEGDIV_TESTS_ORACLES_H_
