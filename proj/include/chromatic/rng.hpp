// Copyright 2026 The Chromatic Authors
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

#ifndef CHROMATIC_RNG_HPP
#define CHROMATIC_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace chromatic {

// Seedable generator with platform-independent output.
//
// std::mt19937_64 is fully specified by the standard, but the standard
// distributions are not, so all derived quantities (unit doubles, bounded
// indices) are computed here from raw 64-bit draws. Generated benchmark
// sets are therefore identical across compilers and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Uniform index in [0, n). n must be positive.
  std::size_t index(std::size_t n) {
    // Rejection sampling removes modulo bias.
    const std::uint64_t bound = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return static_cast<std::size_t>(r % bound);
  }

  // Independent stream seed for sub-task `stream` of a run seeded with
  // `seed` (splitmix64 finalizer).
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace chromatic

#endif  // CHROMATIC_RNG_HPP
