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

#ifndef NLUDIAG_SUBPROCESS_HPP_
#define NLUDIAG_SUBPROCESS_HPP_

#include <string>

namespace nludiag {

// Runs `command` via /bin/sh, feeding `input` on stdin and returning the
// child's full stdout. stderr is inherited. Throws kBackendFailure on
// non-zero exit.
std::string run_subprocess(const std::string& command, const std::string& input);

}  // namespace nludiag

#endif  // NLUDIAG_SUBPROCESS_HPP_
