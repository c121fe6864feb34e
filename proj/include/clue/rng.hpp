// Copyright 2026 The clue Authors
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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace clue {

/**
 * Seedable, splittable random source.
 *
 * A stream is identified by (seed, stream id); split() derives a child stream
 * whose state depends only on the parent identity and the child id, never on
 * how many numbers the parent has drawn. Concurrent tasks therefore get
 * reproducible draws regardless of scheduling.
 */
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x632be59bd9b4e019ULL))),
        engine_(key_) {}

  [[nodiscard]] Rng split(std::uint64_t child) const {
    return Rng(key_, child + 1);
  }

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }
  std::complex<double> complex_normal() {
    // unit variance in total: E|z|^2 = 1
    const double s = 0.7071067811865476;
    double re = normal_(engine_);
    double im = normal_(engine_);
    return {s * re, s * im};
  }
  /// Uniform integer in [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

}  // namespace clue
