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

#include <cstdint>

namespace sunflower {

/// Keyed bijection on [0, size) built from a balanced Feistel network over the
/// smallest even bit width that covers `size`, with cycle walking to stay in range.
/// Cheap to construct, O(1) memory, and invertible, so both graph backends can
/// use it for label scrambling and leaf matchings without materializing tables.
class KeyedPermutation {
 public:
  KeyedPermutation() = default;
  KeyedPermutation(std::uint64_t size, std::uint64_t key);

  std::uint64_t size() const { return size_; }
  std::uint64_t key() const { return key_; }

  std::uint64_t forward(std::uint64_t x) const;
  std::uint64_t inverse(std::uint64_t y) const;

 private:
  static constexpr int kRounds = 6;

  std::uint64_t encrypt(std::uint64_t x) const;
  std::uint64_t decrypt(std::uint64_t y) const;
  std::uint64_t round_fn(int round, std::uint64_t half) const;

  std::uint64_t size_ = 1;
  std::uint64_t key_ = 0;
  int half_bits_ = 1;
  std::uint64_t half_mask_ = 1;
  std::uint64_t round_keys_[kRounds] = {};
};

}  // namespace sunflower
