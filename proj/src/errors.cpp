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

#include "sunflower/errors.hpp"

namespace sunflower {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::ExplicitTooLarge: return "ExplicitTooLarge";
    case ErrorCode::ImplicitBackendUnsupported: return "ImplicitBackendUnsupported";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::RecursionBreakdown: return "RecursionBreakdown";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::NonpositiveGap: return "NonpositiveGap";
    case ErrorCode::DegenerateDistribution: return "DegenerateDistribution";
    case ErrorCode::ExhaustiveTooLarge: return "ExhaustiveTooLarge";
    case ErrorCode::ArtifactNotFound: return "ArtifactNotFound";
    case ErrorCode::ArtifactCorrupt: return "ArtifactCorrupt";
  }
  return "Unknown";
}

}  // namespace sunflower
