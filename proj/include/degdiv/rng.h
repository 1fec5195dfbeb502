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

#ifndef DEGDIV_RNG_H_
#define DEGDIV_RNG_H_

#include <cstdint>
#include <limits>

namespace degdiv {

// SplitMix64 finalizer.
constexpr uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Stateless hash of (seed, a, b). Edge decisions in random graphs use this so
// any pair can be queried without walking a stream.
constexpr uint64_t hash3(uint64_t seed, uint64_t a, uint64_t b) {
  uint64_t h = mix64(seed + kGolden * (a + 1));
  return mix64(h ^ (b * kGolden + 0x632BE59BD9B4E019ULL));
}

// Maps 64 random bits to [0, 1) with 53 bits of precision.
constexpr double to_unit(uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Counter-based generator: the i-th output is a pure function of (key, i).
// split() derives an independent stream, so parallel work can be keyed by
// task index and stay reproducible under any scheduling.
class Rng {
 public:
  using result_type = uint64_t;

  explicit Rng(uint64_t seed = 0) : key_(mix64(seed ^ 0xD1B54A32D192ED03ULL)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() { return mix64(key_ + kGolden * ++counter_); }

  Rng split(uint64_t stream) const {
    Rng child;
    child.key_ = mix64(key_ ^ mix64(stream + 0xA0761D6478BD642FULL));
    return child;
  }

  double uniform() { return to_unit((*this)()); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  bool bernoulli(double p) { return uniform() < p; }

  // Uniform integer in [0, bound) by rejection.
  uint64_t below(uint64_t bound) {
    if (bound <= 1) return 0;
    const uint64_t limit = max() - max() % bound;
    uint64_t x;
    do {
      x = (*this)();
    } while (x >= limit);
    return x % bound;
  }

  uint64_t key() const { return key_; }

 private:
  uint64_t key_ = 0;
  uint64_t counter_ = 0;
};

}  // namespace degdiv

#endif  // DEGDIV_RNG_H_
