// Copyright 2026 The mmd Authors.
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

#include "mmd/errors.hpp"

namespace mmd {

std::string_view ErrorName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNegativeWeight: return "NegativeWeight";
    case ErrorKind::kSumNotOne: return "SumNotOne";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kMalformedProgram: return "MalformedProgram";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kSupportMismatch: return "SupportMismatch";
    case ErrorKind::kParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorKind::kDegenerateSupport: return "DegenerateSupport";
    case ErrorKind::kSupportNotSmaller: return "SupportNotSmaller";
    case ErrorKind::kNotSingleton: return "NotSingleton";
    case ErrorKind::kSupportTooSmall: return "SupportTooSmall";
    case ErrorKind::kCertificationFailed: return "CertificationFailed";
    case ErrorKind::kNotAMinimaxPair: return "NotAMinimaxPair";
    case ErrorKind::kBadDimension: return "BadDimension";
    case ErrorKind::kNonFiniteLoss: return "NonFiniteLoss";
    case ErrorKind::kNonFiniteInput: return "NonFiniteInput";
    case ErrorKind::kMissingFeedback: return "MissingFeedback";
    case ErrorKind::kNonCertifiedGame: return "NonCertifiedGame";
    case ErrorKind::kEmptyTrajectory: return "EmptyTrajectory";
    case ErrorKind::kBadInstance: return "BadInstance";
    case ErrorKind::kMisroutedPolicy: return "MisroutedPolicy";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& detail)
    : std::runtime_error(std::string(ErrorName(kind)) + ": " + detail),
      kind_(kind) {}

void Fail(ErrorKind kind, const std::string& detail) {
  throw Error(kind, detail);
}

}  // namespace mmd
