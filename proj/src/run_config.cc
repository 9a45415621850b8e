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

#include "cskg/run_config.h"

#include <cmath>
#include <fstream>

#include "cskg/digest.h"
#include "cskg/error.h"
#include "cskg/text.h"

namespace cskg {
namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgumentError(message);
}

}  // namespace

void RunConfig::validate() const {
  walk.validate();
  require(filter.min_weight >= 0.0, "min-weight must be >= 0");
  require(filter.min_sim >= -1.0 && filter.min_sim <= 1.0,
          "min-sim must lie in [-1, 1]");
  require(thresholds.pair_gate >= -1.0 && thresholds.pair_gate <= 1.0,
          "pair-gate must lie in [-1, 1]");
  require(thresholds.middle_gate >= -1.0 && thresholds.middle_gate <= 1.0,
          "middle-gate must lie in [-1, 1]");
  require(ratios.train >= 0.0 && ratios.valid >= 0.0 && ratios.test >= 0.0,
          "split ratios must be >= 0");
  require(std::abs(ratios.train + ratios.valid + ratios.test - 1.0) < 1e-9,
          "split ratios must sum to 1");
  require(keywords_k >= 1, "keywords must be >= 1");
  require(max_context_turns >= 1, "max-context-turns must be >= 1");
  require(workers >= 1, "workers must be >= 1");
  require(!vocab_limit || *vocab_limit >= 1, "vocab-limit must be >= 1");
}

nlohmann::json RunConfig::to_json() const {
  return {
      {"paths",
       {{"graph", graph.string()},
        {"embeddings", embeddings.string()},
        {"commongen", commongen.string()},
        {"dialogues", dialogues.string()},
        {"generations", generations.string()},
        {"corpus", corpus.string()},
        {"data_dir", data_dir.string()}}},
      {"load",
       {{"lang", lang},
        {"vocab_limit",
         vocab_limit ? nlohmann::json(*vocab_limit) : nlohmann::json(nullptr)},
        {"min_weight", filter.min_weight},
        {"min_sim", filter.min_sim}}},
      {"walk",
       {{"p", walk.p},
        {"q", walk.q},
        {"length", walk.max_length},
        {"passes", walk.passes},
        {"seed", walk.seed},
        {"split_seed", split_seed},
        {"epoch_seed", epoch_seed},
        {"ratios", {ratios.train, ratios.valid, ratios.test}},
        {"emit_walks", emit_walks}}},
      {"extract",
       {{"pair_gate", thresholds.pair_gate},
        {"middle_gate", thresholds.middle_gate},
        {"keywords", keywords_k},
        {"max_context_turns", max_context_turns}}},
      {"eval",
       {{"either_direction", either_direction},
        {"score_unfiltered", score_unfiltered}}},
  };
}

std::string config_hash(const RunConfig& config) {
  return to_hex(sha256(config.to_json().dump()));
}

Manifest::Manifest(std::string command, const RunConfig& config) {
  json_ = {{"command", std::move(command)},
           {"config", config.to_json()},
           {"config_hash", config_hash(config)},
           {"inputs", nlohmann::json::object()},
           {"outputs", nlohmann::json::array()},
           {"counts", nlohmann::json::object()}};
}

void Manifest::add_input(const std::string& role,
                         const std::filesystem::path& path) {
  json_["inputs"][role] = {{"path", path.string()},
                           {"sha256", to_hex(sha256_file(path))}};
}

void Manifest::add_output(const std::filesystem::path& path) {
  json_["outputs"].push_back(path.filename().string());
}

void Manifest::set(const std::string& key, nlohmann::json value) {
  json_["counts"][key] = std::move(value);
}

void Manifest::write(const std::filesystem::path& dir) const {
  write_json(dir / "manifest.json", json_);
}

void write_jsonl(const std::filesystem::path& path,
                 const std::vector<nlohmann::json>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestionError("cannot write " + path.string());
  for (const auto& row : rows) out << row.dump() << '\n';
  if (!out) throw IngestionError("write error on " + path.string());
}

void write_json(const std::filesystem::path& path,
                const nlohmann::json& value) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestionError("cannot write " + path.string());
  out << value.dump(2) << '\n';
  if (!out) throw IngestionError("write error on " + path.string());
}

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open " + path.string());
  std::vector<nlohmann::json> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) {
      throw IngestionError("invalid JSON at " + path.string() + ":" +
                           std::to_string(line_no));
    }
    rows.push_back(std::move(j));
  }
  return rows;
}

}  // namespace cskg
