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

#include "degdiv/generators.h"

#include <cmath>
#include <string>

#include "degdiv/error.h"
#include "degdiv/rng.h"

namespace degdiv {

namespace {

[[noreturn]] void bad_params(const std::string& what) {
  throw Error(ErrorCode::kInvalidParams, what);
}

int exact_sqrt(int n) {
  int r = static_cast<int>(std::lround(std::sqrt(static_cast<double>(n))));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

int turan_part(int n, int k, int v) {
  const int small = n / k;
  const int big_parts = n % k;
  const int big_span = big_parts * (small + 1);
  if (v < big_span) return v / (small + 1);
  return big_parts + (v - big_span) / small;
}

Graph turan(int n, int k) {
  if (n < 0 || k < 1 || k > std::max(n, 1)) {
    bad_params("turan needs n >= 0 and 1 <= k <= n");
  }
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    const int pu = turan_part(n, k, u);
    for (int v = u + 1; v < n; ++v) {
      if (turan_part(n, k, v) != pu) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph iterated_turan(int n, int blocks, std::optional<int> inner_parts) {
  if (n < 1 || blocks < 1 || n % blocks != 0) {
    bad_params("iterated_turan needs blocks dividing n");
  }
  const int block_size = n / blocks;
  int parts = 0;
  if (inner_parts) {
    parts = *inner_parts;
  } else {
    parts = exact_sqrt(n);
    if (parts * parts != n) bad_params("iterated_turan needs n to be a perfect square");
  }
  if (parts < 1 || parts > block_size || block_size % parts != 0) {
    bad_params("inner part count must divide the block size");
  }
  const int part_size = block_size / parts;
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const bool same_block = u / block_size == v / block_size;
      // Inside a block the complement of a Turán graph joins vertices of
      // the same inner part.
      const bool same_part = (u % block_size) / part_size == (v % block_size) / part_size;
      if (!same_block || same_part) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph gnp(int n, double p, uint64_t seed) {
  if (n < 0 || !(p >= 0.0 && p <= 1.0)) bad_params("gnp needs n >= 0 and p in [0,1]");
  GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (to_unit(hash3(seed, u, v)) < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph threshold_graph(int n, uint64_t dominating) {
  if (n < 0 || n > 64) bad_params("threshold_graph supports n <= 64");
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) {
    if ((dominating >> i) & 1ULL) {
      for (int j = 0; j < i; ++j) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

}  // namespace degdiv
