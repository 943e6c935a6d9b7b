// Copyright 2026 The nludiag Authors
//
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

#ifndef NLUDIAG_ERROR_HPP_
#define NLUDIAG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace nludiag {

enum class ErrorCode {
  kUsage,
  kUnknownTask,
  kEmptyAxis,
  kMissingField,
  kLabelOutOfRange,
  kSchemaMismatch,
  kBadFormat,
  kIoError,
  kDataMissing,
  kEmptyInput,
  kLengthMismatch,
  kNoBaselines,
  kNoResults,
  kTaggerNotLoaded,
  kBackendFailure,
};

const char* error_code_name(ErrorCode code);

// CLI exit-code buckets: 1 = usage error, 2 = data error, 3 = backend failure.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const { return code_; }

  // The message without the code prefix, for re-wrapping with more context.
  const std::string& message() const { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace nludiag

#endif  // NLUDIAG_ERROR_HPP_
