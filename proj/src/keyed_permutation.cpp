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

#include "sunflower/keyed_permutation.hpp"

#include <bit>

#include "sunflower/rng.hpp"

namespace sunflower {

KeyedPermutation::KeyedPermutation(std::uint64_t size, std::uint64_t key) : size_(size), key_(key) {
  const int bits = size <= 1 ? 1 : static_cast<int>(std::bit_width(size - 1));
  half_bits_ = (bits + 1) / 2;
  half_mask_ = (std::uint64_t{1} << half_bits_) - 1;
  for (int r = 0; r < kRounds; ++r) round_keys_[r] = derive_key(key, 0x66656973ULL, r);
}

std::uint64_t KeyedPermutation::round_fn(int round, std::uint64_t half) const {
  return splitmix64(half ^ round_keys_[round]) & half_mask_;
}

std::uint64_t KeyedPermutation::encrypt(std::uint64_t x) const {
  std::uint64_t left = x >> half_bits_;
  std::uint64_t right = x & half_mask_;
  for (int r = 0; r < kRounds; ++r) {
    const std::uint64_t next = left ^ round_fn(r, right);
    left = right;
    right = next;
  }
  return (left << half_bits_) | right;
}

std::uint64_t KeyedPermutation::decrypt(std::uint64_t y) const {
  std::uint64_t left = y >> half_bits_;
  std::uint64_t right = y & half_mask_;
  for (int r = kRounds - 1; r >= 0; --r) {
    const std::uint64_t prev = right ^ round_fn(r, left);
    right = left;
    left = prev;
  }
  return (left << half_bits_) | right;
}

// Cycle walking: the Feistel domain is at most 4x the target range, so the
// expected number of extra steps is below 3.
std::uint64_t KeyedPermutation::forward(std::uint64_t x) const {
  std::uint64_t y = encrypt(x);
  while (y >= size_) y = encrypt(y);
  return y;
}

std::uint64_t KeyedPermutation::inverse(std::uint64_t y) const {
  std::uint64_t x = decrypt(y);
  while (x >= size_) x = decrypt(x);
  return x;
}

}  // namespace sunflower
