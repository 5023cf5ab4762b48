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

#ifndef MMD_ERRORS_HPP_
#define MMD_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace mmd {

// Every failure raised by the library carries one of these kinds. The CLI
// reports the kind's name verbatim.
enum class ErrorKind {
  kNegativeWeight,
  kSumNotOne,
  kDimensionMismatch,
  kMalformedProgram,
  kCapExceeded,
  kSupportMismatch,
  kParameterOutOfRange,
  kDegenerateSupport,
  kSupportNotSmaller,
  kNotSingleton,
  kSupportTooSmall,
  kCertificationFailed,
  kNotAMinimaxPair,
  kBadDimension,
  kNonFiniteLoss,
  kNonFiniteInput,
  kMissingFeedback,
  kNonCertifiedGame,
  kEmptyTrajectory,
  kBadInstance,
  kMisroutedPolicy,
  kParseError,
  kInvalidArgument,
};

std::string_view ErrorName(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail);

  ErrorKind kind() const noexcept { return kind_; }
  std::string_view name() const { return ErrorName(kind_); }

 private:
  ErrorKind kind_;
};

[[noreturn]] void Fail(ErrorKind kind, const std::string& detail);

}  // namespace mmd

#endif  // MMD_ERRORS_HPP_
