// Copyright 2026 The Erdos Clopen Authors
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

#ifndef ERDOS_ERROR_HPP_
#define ERDOS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace erdos {

enum class ErrorCode {
  kInvalidRational,
  kInvalidRoot,
  kUnsupportedForm,
  kEmptyInterval,
  kPreconditionViolated,
  kSourceFailure,
  kScheduleExhausted,
  kInvalidEpsilon,
  kInvalidParams,
  kInvalidSpec,
  kInvalidInput,
};

std::string_view ErrorCodeName(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
/// The message names the invariant that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace erdos

#endif  // ERDOS_ERROR_HPP_
