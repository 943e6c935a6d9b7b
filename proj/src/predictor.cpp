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

#include "nludiag/predictor.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <csignal>
#include <cstring>

#include "nludiag/error.hpp"

namespace nludiag {

PipeMaskedPredictor::PipeMaskedPredictor(std::string command, std::string mask_token)
    : command_(std::move(command)), mask_token_(std::move(mask_token)) {
  if (command_.empty()) {
    throw Error(ErrorCode::kUsage, "predictor command must be non-empty");
  }
}

PipeMaskedPredictor::~PipeMaskedPredictor() {
  if (to_child_ >= 0) ::close(to_child_);
  if (from_child_ >= 0) ::close(from_child_);
  if (pid_ > 0) {
    int status = 0;
    ::waitpid(static_cast<pid_t>(pid_), &status, 0);
  }
}

void PipeMaskedPredictor::spawn() {
  static const bool sigpipe_ignored = [] {
    std::signal(SIGPIPE, SIG_IGN);
    return true;
  }();
  (void)sigpipe_ignored;

  int to_child[2];
  int from_child[2];
  if (::pipe(to_child) != 0 || ::pipe(from_child) != 0) {
    throw Error(ErrorCode::kBackendFailure, "pipe: " + std::string(std::strerror(errno)));
  }
  const pid_t pid = ::fork();
  if (pid < 0) {
    throw Error(ErrorCode::kBackendFailure, "fork: " + std::string(std::strerror(errno)));
  }
  if (pid == 0) {
    ::dup2(to_child[0], STDIN_FILENO);
    ::dup2(from_child[1], STDOUT_FILENO);
    ::close(to_child[0]);
    ::close(to_child[1]);
    ::close(from_child[0]);
    ::close(from_child[1]);
    ::execl("/bin/sh", "sh", "-c", command_.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  pid_ = pid;
  to_child_ = to_child[1];
  from_child_ = from_child[0];
  ::close(to_child[0]);
  ::close(from_child[1]);
}

std::string PipeMaskedPredictor::read_line() {
  while (true) {
    const std::size_t newline = buffer_.find('\n');
    if (newline != std::string::npos) {
      std::string line = buffer_.substr(0, newline);
      buffer_.erase(0, newline + 1);
      return line;
    }
    char chunk[4096];
    const ssize_t got = ::read(from_child_, chunk, sizeof(chunk));
    if (got < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kBackendFailure,
                  "read from predictor: " + std::string(std::strerror(errno)));
    }
    if (got == 0) {
      throw Error(ErrorCode::kBackendFailure,
                  "predictor '" + command_ + "' closed its output mid-query");
    }
    buffer_.append(chunk, static_cast<std::size_t>(got));
  }
}

std::string PipeMaskedPredictor::predict_top1(const std::string& masked_text) {
  if (pid_ < 0) spawn();

  nlohmann::ordered_json request;
  request["version"] = kProbeProtocolVersion;
  request["mask_token"] = mask_token_;
  request["text"] = masked_text;
  const std::string line = request.dump() + "\n";

  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t sent = ::write(to_child_, line.data() + written, line.size() - written);
    if (sent < 0) {
      if (errno == EINTR) continue;
      throw Error(ErrorCode::kBackendFailure,
                  "write to predictor: " + std::string(std::strerror(errno)));
    }
    written += static_cast<std::size_t>(sent);
  }

  const std::string raw = read_line();
  auto response = nlohmann::ordered_json::parse(raw, nullptr, false);
  if (response.is_discarded() || !response.is_object()) {
    throw Error(ErrorCode::kBackendFailure, "predictor wrote a non-JSON line: " + raw);
  }
  if (response.contains("error")) {
    throw Error(ErrorCode::kBackendFailure,
                "predictor error: " + response["error"].get<std::string>());
  }
  if (!response.contains("token") || !response["token"].is_string()) {
    throw Error(ErrorCode::kBackendFailure, "predictor response lacks a token string");
  }
  return response["token"].get<std::string>();
}

std::unique_ptr<MaskedPredictor> make_masked_predictor(const std::string& spec,
                                                       const std::string& mask_token) {
  if (spec.rfind("constant:", 0) == 0) {
    return std::make_unique<ConstantPredictor>(spec.substr(9));
  }
  if (spec.rfind("cmd:", 0) == 0) {
    return std::make_unique<PipeMaskedPredictor>(spec.substr(4), mask_token);
  }
  throw Error(ErrorCode::kUsage,
              "unknown predictor spec: " + spec + " (use constant:<word> or cmd:<command>)");
}

}  // namespace nludiag
