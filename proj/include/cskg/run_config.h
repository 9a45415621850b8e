// Copyright 2026 The cskg Authors.
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

#ifndef CSKG_RUN_CONFIG_H_
#define CSKG_RUN_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "cskg/corpus_forge.h"
#include "cskg/cs_extractor.h"
#include "cskg/kg_store.h"
#include "cskg/walk_engine.h"

namespace cskg {

// Everything a pipeline run depends on. Defaults are the published recipe
// values where one exists.
struct RunConfig {
  std::filesystem::path graph;        // assertion dump
  std::filesystem::path embeddings;   // text vectors
  std::filesystem::path commongen;    // CommonGen-style JSON-Lines
  std::filesystem::path dialogues;    // dialogue JSON
  std::filesystem::path generations;  // model output, one per line
  std::filesystem::path corpus;       // existing corpus directory (resample)
  std::filesystem::path out = "out";
  std::filesystem::path data_dir;   // stopwords.txt, pos_lexicon.tsv
  std::filesystem::path cache_dir;  // graph snapshots; empty disables

  std::string lang = "en";
  std::optional<std::size_t> vocab_limit;
  FilterOptions filter;

  WalkConfig walk;
  SplitRatios ratios;
  std::uint64_t split_seed = 0;
  std::uint64_t epoch_seed = 1;
  bool emit_walks = false;

  ExtractionThresholds thresholds;
  std::size_t keywords_k = 5;
  std::size_t max_context_turns = 3;

  bool either_direction = false;
  bool score_unfiltered = false;

  std::size_t workers = 1;

  // Throws InvalidArgumentError when a value is outside its documented
  // range.
  void validate() const;

  // Every field, paths as strings. Worker count is excluded because it does
  // not affect outputs.
  nlohmann::json to_json() const;
};

// SHA-256 hex of the canonical JSON form of the config.
std::string config_hash(const RunConfig& config);

// Reproducibility record written next to every command's outputs.
class Manifest {
 public:
  Manifest(std::string command, const RunConfig& config);

  // Records the SHA-256 of an input file.
  void add_input(const std::string& role, const std::filesystem::path& path);
  void add_output(const std::filesystem::path& path);
  void set(const std::string& key, nlohmann::json value);

  const nlohmann::json& json() const { return json_; }

  // Writes <dir>/manifest.json.
  void write(const std::filesystem::path& dir) const;

 private:
  nlohmann::json json_;
};

// Writes one compact JSON document per line. Throws IngestionError on I/O
// failure.
void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::json>& rows);

// Pretty-printed JSON with a trailing newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& value);

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

}  // namespace cskg

#endif  // CSKG_RUN_CONFIG_H_
