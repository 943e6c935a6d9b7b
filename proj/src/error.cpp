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

#include "nludiag/error.hpp"

namespace nludiag {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage: return "usage";
    case ErrorCode::kUnknownTask: return "unknown-task";
    case ErrorCode::kEmptyAxis: return "empty-axis";
    case ErrorCode::kMissingField: return "missing-field";
    case ErrorCode::kLabelOutOfRange: return "label-out-of-range";
    case ErrorCode::kSchemaMismatch: return "schema-mismatch";
    case ErrorCode::kBadFormat: return "bad-format";
    case ErrorCode::kIoError: return "io-error";
    case ErrorCode::kDataMissing: return "data-missing";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kLengthMismatch: return "length-mismatch";
    case ErrorCode::kNoBaselines: return "no-baselines";
    case ErrorCode::kNoResults: return "no-results";
    case ErrorCode::kTaggerNotLoaded: return "tagger-not-loaded";
    case ErrorCode::kBackendFailure: return "backend-failure";
  }
  return "error";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUsage:
    case ErrorCode::kUnknownTask:
    case ErrorCode::kEmptyAxis:
      return 1;
    case ErrorCode::kBackendFailure:
      return 3;
    default:
      return 2;
  }
}

}  // namespace nludiag
