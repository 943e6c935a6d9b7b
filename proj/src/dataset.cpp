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

#include "nludiag/dataset.hpp"

#include <zlib.h>

#include <charconv>
#include <fstream>
#include <sstream>

#include "nludiag/error.hpp"

namespace nludiag {

namespace {

std::vector<std::string> split_tsv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r') {
    fields.back().pop_back();
  }
  return fields;
}

double parse_label(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kBadFormat,
                "line " + std::to_string(line_no) + ": non-numeric label '" + text + "'");
  }
  return value;
}

// Column index for a schema field, via its accepted source names.
std::size_t resolve_column(const std::string& field, const FieldMapping& mapping,
                           const std::vector<std::string>& header,
                           const std::filesystem::path& path) {
  std::vector<std::string> candidates{field};
  if (auto it = mapping.find(field); it != mapping.end()) candidates = it->second;
  for (const std::string& name : candidates) {
    for (std::size_t i = 0; i < header.size(); ++i) {
      if (header[i] == name) return i;
    }
  }
  throw Error(ErrorCode::kMissingField,
              path.string() + ": header has no column for field '" + field + "'");
}

std::vector<Record> read_tsv(const TaskSchema& schema, const FieldMapping& mapping,
                             const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kBadFormat, path.string() + ": missing header row");
  }
  const std::vector<std::string> header = split_tsv_line(line);

  std::vector<std::size_t> text_cols;
  for (const std::string& field : schema.text_fields) {
    text_cols.push_back(resolve_column(field, mapping, header, path));
  }
  const std::size_t label_col = resolve_column(schema.label_field, mapping, header, path);

  std::vector<Record> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    const std::vector<std::string> fields = split_tsv_line(line);
    Record record;
    for (std::size_t i = 0; i < schema.text_fields.size(); ++i) {
      if (text_cols[i] >= fields.size()) {
        throw Error(ErrorCode::kMissingField, "line " + std::to_string(line_no) +
                                                  ": missing field '" + schema.text_fields[i] +
                                                  "'");
      }
      record[schema.text_fields[i]] = fields[text_cols[i]];
    }
    if (label_col >= fields.size()) {
      throw Error(ErrorCode::kMissingField, "line " + std::to_string(line_no) +
                                                ": missing field '" + schema.label_field + "'");
    }
    const double value = parse_label(fields[label_col], line_no);
    if (schema.label_kind == LabelKind::kRegression0To5) {
      record[schema.label_field] = value;
    } else {
      record[schema.label_field] = static_cast<long long>(value);
    }
    records.push_back(std::move(record));
  }
  return records;
}

std::vector<Record> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());

  std::vector<Record> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line == "\r") continue;
    Record record = Record::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw Error(ErrorCode::kBadFormat,
                  path.string() + ": line " + std::to_string(line_no) + " is not a JSON object");
    }
    records.push_back(std::move(record));
  }
  return records;
}

// Integral labels may arrive as either 1 or 1.0; order text fields first so
// TSV- and JSONL-sourced splits compare equal.
Record normalize_record(const Record& record, const TaskSchema& schema) {
  Record out;
  for (const std::string& field : schema.text_fields) {
    if (auto it = record.find(field); it != record.end()) out[field] = *it;
  }
  if (auto it = record.find(schema.label_field); it != record.end()) {
    if (schema.label_kind == LabelKind::kRegression0To5) {
      if (it->is_number()) {
        out[schema.label_field] = it->get<double>();
      } else {
        out[schema.label_field] = *it;
      }
    } else if (it->is_number()) {
      out[schema.label_field] = static_cast<long long>(it->get<double>());
    } else {
      out[schema.label_field] = *it;
    }
  }
  for (auto it = record.begin(); it != record.end(); ++it) {
    if (!out.contains(it.key())) out[it.key()] = it.value();
  }
  return out;
}

std::filesystem::path manifest_path(const std::filesystem::path& jsonl_path) {
  std::filesystem::path p = jsonl_path;
  p.replace_extension();
  p += ".manifest.json";
  return p;
}

std::string crc32_hex(const std::string& bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  crc = crc32(crc, reinterpret_cast<const Bytef*>(bytes.data()),
              static_cast<uInt>(bytes.size()));
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%08lx", static_cast<unsigned long>(crc));
  return buf;
}

}  // namespace

DatasetSplit load_split(const std::string& task, const std::string& split,
                        const std::filesystem::path& path) {
  return load_split(task, split, path, default_field_mapping(schema_for(task)));
}

DatasetSplit load_split(const std::string& task, const std::string& split,
                        const std::filesystem::path& path, const FieldMapping& mapping) {
  const TaskSchema& schema = schema_for(task);

  std::vector<Record> raw;
  const std::string ext = path.extension().string();
  if (ext == ".tsv") {
    raw = read_tsv(schema, mapping, path);
  } else if (ext == ".jsonl") {
    raw = read_jsonl(path);
  } else {
    throw Error(ErrorCode::kBadFormat, "unsupported dataset extension: " + path.string());
  }

  DatasetSplit dataset;
  dataset.task = task;
  dataset.split = split;
  dataset.records.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    Record record = normalize_record(raw[i], schema);
    validate_record(record, schema, i);
    dataset.records.push_back(std::move(record));
  }
  return dataset;
}

void save_split(const DatasetSplit& dataset, const std::filesystem::path& jsonl_path) {
  std::error_code ec;
  std::filesystem::create_directories(jsonl_path.parent_path(), ec);

  std::string body;
  for (const Record& record : dataset.records) {
    body += record.dump();
    body.push_back('\n');
  }

  {
    std::ofstream out(jsonl_path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::kIoError, "cannot write " + jsonl_path.string());
    out << body;
    if (!out) throw Error(ErrorCode::kIoError, "write failed: " + jsonl_path.string());
  }

  nlohmann::ordered_json manifest;
  manifest["task"] = dataset.task;
  manifest["split"] = dataset.split;
  manifest["provenance"] =
      dataset.provenance ? nlohmann::ordered_json(word_class_name(*dataset.provenance))
                         : nlohmann::ordered_json(nullptr);
  manifest["count"] = dataset.records.size();
  manifest["checksum"] = "crc32:" + crc32_hex(body);

  std::ofstream out(manifest_path(jsonl_path), std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot write " + manifest_path(jsonl_path).string());
  }
  out << manifest.dump(2) << '\n';
}

nlohmann::ordered_json load_manifest(const std::filesystem::path& jsonl_path) {
  std::ifstream in(manifest_path(jsonl_path));
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + manifest_path(jsonl_path).string());
  }
  return nlohmann::ordered_json::parse(in);
}

std::filesystem::path split_dir(const std::filesystem::path& data_root, const std::string& task,
                                std::optional<WordClass> provenance) {
  return data_root / (provenance ? corrupted_dataset_name(task, *provenance) : task);
}

std::filesystem::path locate_split_file(const std::filesystem::path& data_root,
                                        const std::string& task, const std::string& split,
                                        std::optional<WordClass> provenance) {
  const std::filesystem::path dir = split_dir(data_root, task, provenance);
  for (const char* ext : {".jsonl", ".tsv"}) {
    std::filesystem::path candidate = dir / (split + ext);
    if (std::filesystem::exists(candidate)) return candidate;
  }
  throw Error(ErrorCode::kDataMissing,
              "no " + split + ".jsonl or " + split + ".tsv under " + dir.string());
}

DatasetSplit load_split_from_root(const std::filesystem::path& data_root, const std::string& task,
                                  const std::string& split,
                                  std::optional<WordClass> provenance) {
  DatasetSplit dataset =
      load_split(task, split, locate_split_file(data_root, task, split, provenance));
  dataset.provenance = provenance;
  return dataset;
}

DatasetSplit corrupt_dataset(const DatasetSplit& dataset, WordClass target,
                             const Tagger& tagger) {
  DatasetSplit out;
  out.task = dataset.task;
  out.split = dataset.split;
  out.provenance = target;
  out.records = corrupt_split(dataset.records, schema_for(dataset.task), target, tagger);
  return out;
}

}  // namespace nludiag
