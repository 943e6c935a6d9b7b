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

#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <csignal>
#include <cstring>

#include "nludiag/backend.hpp"
#include "nludiag/error.hpp"
#include "nludiag/subprocess.hpp"

namespace nludiag {

namespace {

void close_fd(int& fd) {
  if (fd >= 0) {
    ::close(fd);
    fd = -1;
  }
}

}  // namespace

std::string run_subprocess(const std::string& command, const std::string& input) {
  // A child exiting early must surface as its exit status, not as SIGPIPE.
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
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }

  int write_fd = to_child[1];
  int read_fd = from_child[0];
  ::close(to_child[0]);
  ::close(from_child[1]);

  // Interleave writing and reading so neither pipe buffer can deadlock us.
  std::string output;
  std::size_t written = 0;
  char buf[65536];
  while (write_fd >= 0 || read_fd >= 0) {
    struct pollfd fds[2];
    nfds_t n = 0;
    if (write_fd >= 0) fds[n++] = {write_fd, POLLOUT, 0};
    if (read_fd >= 0) fds[n++] = {read_fd, POLLIN, 0};
    if (::poll(fds, n, -1) < 0) {
      if (errno == EINTR) continue;
      break;
    }
    for (nfds_t i = 0; i < n; ++i) {
      if (fds[i].fd == write_fd && (fds[i].revents & (POLLOUT | POLLERR))) {
        const ssize_t sent =
            ::write(write_fd, input.data() + written, input.size() - written);
        if (sent < 0) {
          if (errno == EINTR) continue;
          close_fd(write_fd);  // child stopped reading; its exit status decides
        } else {
          written += static_cast<std::size_t>(sent);
          if (written == input.size()) close_fd(write_fd);
        }
      } else if (fds[i].fd == read_fd && (fds[i].revents & (POLLIN | POLLHUP))) {
        const ssize_t got = ::read(read_fd, buf, sizeof(buf));
        if (got < 0) {
          if (errno == EINTR) continue;
          close_fd(read_fd);
        } else if (got == 0) {
          close_fd(read_fd);
        } else {
          output.append(buf, static_cast<std::size_t>(got));
        }
      }
    }
  }
  close_fd(write_fd);
  close_fd(read_fd);

  int status = 0;
  ::waitpid(pid, &status, 0);
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    const std::string detail = WIFEXITED(status)
                                   ? "exit status " + std::to_string(WEXITSTATUS(status))
                                   : "terminated by signal";
    throw Error(ErrorCode::kBackendFailure, "command '" + command + "' failed (" + detail + ")");
  }
  return output;
}

namespace {

struct PendingModel : TrainerBackend::Model {
  DatasetSplit train;
  Hyperparams hp;
};

nlohmann::ordered_json schema_json(const TaskSchema& schema) {
  nlohmann::ordered_json out;
  out["name"] = schema.name;
  out["text_fields"] = schema.text_fields;
  out["label_field"] = schema.label_field;
  out["label_kind"] = label_kind_name(schema.label_kind);
  out["metric"] = metric_name(schema.metric);
  return out;
}

}  // namespace

SubprocessBackend::SubprocessBackend(std::string command) : command_(std::move(command)) {
  if (command_.empty()) {
    throw Error(ErrorCode::kUsage, "subprocess backend needs a non-empty command");
  }
}

std::unique_ptr<TrainerBackend::Model> SubprocessBackend::fit(const DatasetSplit& train,
                                                              const TaskSchema& schema,
                                                              const Hyperparams& hp) {
  (void)schema;
  auto model = std::make_unique<PendingModel>();
  model->train = train;
  model->hp = hp;
  return model;
}

std::vector<double> SubprocessBackend::predict(Model& model, const DatasetSplit& eval,
                                               const TaskSchema& schema) {
  auto* pending = dynamic_cast<PendingModel*>(&model);
  if (pending == nullptr) {
    throw Error(ErrorCode::kBackendFailure, "model was not produced by this backend");
  }

  nlohmann::ordered_json request;
  request["version"] = kBackendProtocolVersion;
  request["task"] = schema.name;
  request["schema"] = schema_json(schema);
  request["hyperparams"] = {{"epochs", pending->hp.epochs},
                            {"batch_size", pending->hp.batch_size},
                            {"learning_rate", pending->hp.learning_rate},
                            {"seed", pending->hp.seed}};
  request["train"] = pending->train.records;
  request["eval"] = eval.records;

  const std::string raw = run_subprocess(command_, request.dump() + "\n");

  auto response = nlohmann::ordered_json::parse(raw, nullptr, false);
  if (response.is_discarded() || !response.is_object()) {
    throw Error(ErrorCode::kBackendFailure,
                "command '" + command_ + "' wrote no JSON object on stdout");
  }
  if (response.contains("error")) {
    throw Error(ErrorCode::kBackendFailure,
                "backend error: " + response["error"].get<std::string>());
  }
  if (!response.contains("predictions") || !response["predictions"].is_array()) {
    throw Error(ErrorCode::kBackendFailure, "backend response lacks a predictions array");
  }

  std::vector<double> predictions;
  for (const auto& value : response["predictions"]) {
    if (!value.is_number()) {
      throw Error(ErrorCode::kBackendFailure, "non-numeric prediction in backend response");
    }
    predictions.push_back(value.get<double>());
  }
  if (predictions.size() != eval.records.size()) {
    throw Error(ErrorCode::kBackendFailure,
                "backend returned " + std::to_string(predictions.size()) + " predictions for " +
                    std::to_string(eval.records.size()) + " eval records");
  }
  return predictions;
}

}  // namespace nludiag
