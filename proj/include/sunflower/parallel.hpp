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
#include <functional>

namespace sunflower {

/// Run `body(i)` for every i in [0, count) on up to `workers` threads. Work is
/// handed out by index, so results written per index are schedule-independent.
/// The first exception thrown by any body is rethrown on the calling thread.
void parallel_for(std::uint64_t count, int workers, const std::function<void(std::uint64_t)>& body);

/// Positive `requested` wins, then the SUNFLOWER_WORKERS environment variable,
/// then the hardware concurrency.
int resolve_workers(int requested);

}  // namespace sunflower
