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

#ifndef FATGHOM_ERROR_H_
#define FATGHOM_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace fatghom {

enum class ErrorCode {
  kMalformedLabels,
  kDisconnected,
  kEmptyGraph,
  kLowValence,
  kLoopContraction,
  kInvalidPermutations,
  kNotIncidencePreserving,
  kCycleNotFound,
  kInvalidSignature,
  kInfeasibleSize,
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception type; the code
// lets callers (and tests) distinguish failure classes without parsing text.
class FatgraphError : public std::runtime_error {
 public:
  FatgraphError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fatghom

#endif  // FATGHOM_ERROR_H_
