// Copyright 2026 The siteselect Authors
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

#ifndef SITESELECT_RNG_HPP_
#define SITESELECT_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>

namespace siteselect {

// Seedable generator whose draws are identical on every platform.
//
// The engine is std::mt19937_64, whose output sequence is fixed by the
// standard. The standard distributions are not, so the integer and real
// draws below are derived from raw engine output directly.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n) {
    const std::uint64_t bound = n;
    // Rejection keeps the draw unbiased: discard the short final bucket.
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
    std::uint64_t x = next();
    while (x > limit) x = next();
    return static_cast<std::size_t>(x % bound);
  }

  // Uniform real in [0, 1) with 53 bits of resolution.
  double uniform01() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // True with probability p. Always consumes exactly one draw.
  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace siteselect

#endif  // SITESELECT_RNG_HPP_
