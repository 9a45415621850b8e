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

// One-hop / two-hop commonsense extraction between concepts, and two-way
// (chains <-> sentence) record construction.
//
// For a concept pair (a, b):
//   * a direct assertion wins: highest weight, then relation name, then the
//     (a -> b) orientation, then assertion order;
//   * otherwise, if cos(a, b) >= pair_gate, every middle m adjacent to both
//     with cos(m, a) > middle_gate or cos(m, b) > middle_gate is a candidate,
//     and the edge pair with the largest weight sum wins (ties: middle
//     surface, then the same per-edge order as above);
//   * otherwise nothing.

#ifndef CSKG_CS_EXTRACTOR_H_
#define CSKG_CS_EXTRACTOR_H_

#include <cstddef>
#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cskg/embedding_store.h"
#include "cskg/kg_store.h"
#include "cskg/triplet_codec.h"

namespace cskg {

struct ExtractionThresholds {
  double pair_gate = 0.3;    // cos(a, b) >= pair_gate
  double middle_gate = 0.5;  // cos(m, a) > middle_gate or cos(m, b) > ...
};

enum class HopKind { kOneHop, kTwoHop };

struct PairExtraction {
  HopKind kind = HopKind::kOneHop;
  TripletChain chain;
  std::optional<std::string> middle;
  double score = 0.0;  // edge weight, or the sum of both edge weights
};

std::optional<PairExtraction> extract_pair(
    const ConceptGraph& graph, const SimilarityCache& similarity,
    std::string_view a, std::string_view b,
    const ExtractionThresholds& thresholds = {});

// 2..8 distinct normalized concepts.
class ConceptSet {
 public:
  // Throws InvalidArgumentError on invalid labels, duplicates, or a size
  // outside [2, 8].
  explicit ConceptSet(const std::vector<std::string>& labels);

  const std::vector<std::string>& concepts() const { return concepts_; }

 private:
  std::vector<std::string> concepts_;
};

struct PairResult {
  std::string a;
  std::string b;
  bool unknown_concept = false;
  std::optional<PairExtraction> extraction;
};

struct ExtractionResult {
  std::vector<PairResult> pairs;

  std::vector<TripletChain> chains() const;
  bool empty() const;
  std::size_t triplet_count() const;
  // "c1; c2"
  std::string joined() const;
  // "c1; c2;"
  std::string terminated() const;
};

// All C(n, 2) pairs (i < j) in input order.
ExtractionResult extract_set(const ConceptGraph& graph,
                             const SimilarityCache& similarity,
                             std::span<const std::string> concepts,
                             const ExtractionThresholds& thresholds = {});

ExtractionResult extract_set(const ConceptGraph& graph,
                             const SimilarityCache& similarity,
                             const ConceptSet& concepts,
                             const ExtractionThresholds& thresholds = {});

// "<|commonsense|> c1; c2;" or empty when nothing was extracted.
std::string commonsense_text(std::span<const TripletChain> chains);

struct CommonGenEntry {
  std::vector<std::string> concepts;
  std::vector<std::string> sentences;
};

// JSON-Lines with {"concepts": [...], "sentences": [...]}; the original
// CommonGen keys {"concept_set": "a#b#c", "scene": [...]} are accepted too.
// Throws IngestionError for unreadable files or invalid lines.
std::vector<CommonGenEntry> read_commongen(const std::filesystem::path& path);

enum class Direction { kCsToSentence, kSentenceToCs };

std::string_view direction_name(Direction direction);

struct TwoWayRecord {
  Direction direction = Direction::kCsToSentence;
  std::string input;
  std::string target;
};

struct TwoWayStats {
  std::size_t entries = 0;
  std::size_t skipped_entries = 0;   // nothing extracted
  std::size_t invalid_entries = 0;   // concept set rejected
  std::size_t unknown_concepts = 0;  // pairs with a concept not in the graph
  std::size_t pairs = 0;             // (chain set, sentence) pairs
  std::size_t records = 0;
  std::size_t triplets = 0;  // summed over pairs

  double mean_triplets() const;
  nlohmann::json to_json() const;
};

struct TwoWayBuild {
  std::vector<TwoWayRecord> records;
  TwoWayStats stats;
};

// Two records (both directions) per sentence of every entry with a
// non-empty extraction, in entry order.
TwoWayBuild build_two_way(std::span<const CommonGenEntry> entries,
                          const ConceptGraph& graph,
                          const SimilarityCache& similarity,
                          const ExtractionThresholds& thresholds = {},
                          std::size_t workers = 1);

// {"direction", "input", "target"}
nlohmann::json record_to_json(const TwoWayRecord& record);

}  // namespace cskg

#endif  // CSKG_CS_EXTRACTOR_H_
