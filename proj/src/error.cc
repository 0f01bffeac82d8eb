// Copyright 2026 The fatghom Authors.
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

#include "fatghom/error.h"

namespace fatghom {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLabels: return "MalformedLabels";
    case ErrorCode::kDisconnected: return "Disconnected";
    case ErrorCode::kEmptyGraph: return "EmptyGraph";
    case ErrorCode::kLowValence: return "LowValence";
    case ErrorCode::kLoopContraction: return "LoopContraction";
    case ErrorCode::kInvalidPermutations: return "InvalidPermutations";
    case ErrorCode::kNotIncidencePreserving: return "NotIncidencePreserving";
    case ErrorCode::kCycleNotFound: return "CycleNotFound";
    case ErrorCode::kInvalidSignature: return "InvalidSignature";
    case ErrorCode::kInfeasibleSize: return "InfeasibleSize";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace fatghom
