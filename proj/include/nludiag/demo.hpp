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

#ifndef NLUDIAG_DEMO_HPP_
#define NLUDIAG_DEMO_HPP_

#include <filesystem>
#include <string>

namespace nludiag {

// Synthetic desk-scale corpora in the shipped dataset layout, for tasks
// "sst-2", "mrpc" and "sts-b". Sentences are assembled from vocabulary the
// bundled rule tagger covers, so corruption behaves the same as on natural
// text. Deterministic for a fixed seed. Writes {task}/train.jsonl and
// {task}/dev.jsonl under data_root.
void write_demo_task(const std::filesystem::path& data_root, const std::string& task,
                     std::size_t train_records, std::size_t dev_records, unsigned seed);

}  // namespace nludiag

#endif  // NLUDIAG_DEMO_HPP_
