// Copyright 2026 The Sunflower Pathfinding Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace sunflower {

using Rng = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive an independent 64-bit key from a seed and up to three labels.
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t tag, std::uint64_t a = 0,
                                   std::uint64_t b = 0) {
  std::uint64_t h = splitmix64(seed ^ 0x243f6a8885a308d3ULL);
  h = splitmix64(h ^ tag);
  h = splitmix64(h ^ a);
  return splitmix64(h ^ b);
}

// Stream tags used when splitting the instance seed.
inline constexpr std::uint64_t kTagLabels = 0x6c6162656c73ULL;
inline constexpr std::uint64_t kTagMatching = 0x6d61746368ULL;
inline constexpr std::uint64_t kTagTrial = 0x747269616cULL;
inline constexpr std::uint64_t kTagSweep = 0x7377656570ULL;

/// Per-trial generator; identical (seed, trial) always yields the same stream.
inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial, std::uint64_t tag = kTagTrial) {
  return Rng(derive_key(seed, tag, trial));
}

/// Uniform double in [0, 1) with 53 random bits. Defined here rather than via
/// std::uniform_real_distribution so streams are identical across standard libraries.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// Unbiased uniform integer in [0, bound), bound > 0.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Standard normal draw by Box-Muller, consuming two uniforms.
inline double normal01(Rng& rng) {
  const double u1 = 1.0 - uniform01(rng);  // (0, 1]
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Fisher-Yates shuffle with uniform_below.
template <typename It>
void shuffle_range(It first, It last, Rng& rng) {
  const auto count = static_cast<std::uint64_t>(last - first);
  for (std::uint64_t i = count; i > 1; --i) {
    const std::uint64_t j = uniform_below(rng, i);
    std::swap(first[i - 1], first[j]);
  }
}

}  // namespace sunflower
