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

#ifndef NLUDIAG_PREDICTOR_HPP_
#define NLUDIAG_PREDICTOR_HPP_

#include <memory>
#include <string>

#include "nludiag/analysis.hpp"

namespace nludiag {

// Always answers the same word; the degenerate reference point for probes.
class ConstantPredictor : public MaskedPredictor {
 public:
  explicit ConstantPredictor(std::string word) : word_(std::move(word)) {}

  std::string predict_top1(const std::string& masked_text) override {
    (void)masked_text;
    return word_;
  }

  std::string id() const override { return "constant:" + word_; }

 private:
  std::string word_;
};

// Keeps one child process alive across queries and exchanges one JSON line
// per prediction:
//
//   request:  {"version": "nludiag-probe-v1", "mask_token": ..., "text": ...}
//   response: {"token": "word"} or {"error": "message"}
//
// The child loads its model once and answers until stdin closes; see
// tools/hf_masked_lm.py for a reference implementation.
class PipeMaskedPredictor : public MaskedPredictor {
 public:
  PipeMaskedPredictor(std::string command, std::string mask_token);
  ~PipeMaskedPredictor() override;

  PipeMaskedPredictor(const PipeMaskedPredictor&) = delete;
  PipeMaskedPredictor& operator=(const PipeMaskedPredictor&) = delete;

  std::string predict_top1(const std::string& masked_text) override;
  std::string id() const override { return "cmd:" + command_; }

 private:
  void spawn();
  std::string read_line();

  std::string command_;
  std::string mask_token_;
  int to_child_ = -1;
  int from_child_ = -1;
  long pid_ = -1;
  std::string buffer_;
};

inline constexpr std::string_view kProbeProtocolVersion = "nludiag-probe-v1";

// "constant:<word>" or "cmd:<shell command>".
std::unique_ptr<MaskedPredictor> make_masked_predictor(const std::string& spec,
                                                       const std::string& mask_token);

}  // namespace nludiag

#endif  // NLUDIAG_PREDICTOR_HPP_
