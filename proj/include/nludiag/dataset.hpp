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

#ifndef NLUDIAG_DATASET_HPP_
#define NLUDIAG_DATASET_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "nludiag/corruption.hpp"
#include "nludiag/schema.hpp"
#include "nludiag/tagger.hpp"

namespace nludiag {

// An ordered, schema-validated split. provenance names the removed word
// class for corrupted variants and is empty for originals.
struct DatasetSplit {
  std::string task;
  std::string split;  // "train", "dev", "dev-matched", ...
  std::vector<Record> records;
  std::optional<WordClass> provenance;

  bool operator==(const DatasetSplit&) const = default;
};

// Reads TSV (header row, UTF-8) or JSONL, chosen by file extension. Records
// are validated against the task schema; order is preserved. The mapping
// resolves source column names onto schema fields (defaults cover common
// distribution headers).
DatasetSplit load_split(const std::string& task, const std::string& split,
                        const std::filesystem::path& path);
DatasetSplit load_split(const std::string& task, const std::string& split,
                        const std::filesystem::path& path, const FieldMapping& mapping);

// Writes JSONL (one record per line, schema field order first) plus a sidecar
// manifest `<stem>.manifest.json` with {task, split, provenance, count,
// checksum}. The checksum is a CRC-32 of the JSONL bytes.
void save_split(const DatasetSplit& dataset, const std::filesystem::path& jsonl_path);

nlohmann::ordered_json load_manifest(const std::filesystem::path& jsonl_path);

// Directory layout under a data root: `{task}` for originals and
// `{task}-{wordclass}` for corrupted variants.
std::filesystem::path split_dir(const std::filesystem::path& data_root, const std::string& task,
                                std::optional<WordClass> provenance);

// Resolves `<dir>/<split>.jsonl` or `.tsv` (in that order). Throws
// kDataMissing when neither exists.
std::filesystem::path locate_split_file(const std::filesystem::path& data_root,
                                        const std::string& task, const std::string& split,
                                        std::optional<WordClass> provenance);

// Loads a split from the data-root layout.
DatasetSplit load_split_from_root(const std::filesystem::path& data_root, const std::string& task,
                                  const std::string& split,
                                  std::optional<WordClass> provenance = std::nullopt);

// Corrupts every record of a split; the result carries the word class as
// provenance.
DatasetSplit corrupt_dataset(const DatasetSplit& dataset, WordClass target, const Tagger& tagger);

}  // namespace nludiag

#endif  // NLUDIAG_DATASET_HPP_
