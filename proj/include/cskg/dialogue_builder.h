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

// Commonsense-annotated dialogue records.
//
// Every system turn with at least one earlier turn yields a record whose
// context is the previous (at most three) turns. Keywords are mined from each
// context turn and from the response; chains are extracted for every pair of
// context keywords and for every (context keyword, response keyword) pair.
// A chain found only through the first kind of pair is tagged context-only,
// only through the second context-response, and through both both-sides.
//
// Serialized form:
//   input  = "[USER] u1 [SYSTEM] s1 [USER] u2"
//   target = "<|commonsense|> c1; c2; [SYSTEM] response"
// with the commonsense segment omitted when no chain was found.

#ifndef CSKG_DIALOGUE_BUILDER_H_
#define CSKG_DIALOGUE_BUILDER_H_

#include <cstddef>
#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cskg/cs_extractor.h"
#include "cskg/keyword_miner.h"
#include "cskg/triplet_codec.h"

namespace cskg {

inline constexpr std::string_view kUserMarker = "[USER]";
inline constexpr std::string_view kSystemMarker = "[SYSTEM]";

enum class Speaker { kUser, kSystem };

struct Turn {
  Speaker speaker = Speaker::kUser;
  std::string text;
};

struct Dialogue {
  std::string id;
  std::vector<Turn> turns;
};

// Reads a JSON object mapping dialogue id -> {"turns": [...]}, optionally
// with "speakers": ["user"|"system", ...]. Without speakers the turns
// alternate starting with the user. Output is ordered by id. Throws
// IngestionError on unreadable or invalid input.
std::vector<Dialogue> read_dialogues(const std::filesystem::path& path);

enum class Provenance { kContextOnly, kContextResponse, kBothSides };

std::string_view provenance_name(Provenance provenance);

struct DialogueRecord {
  std::string dialogue_id;
  std::size_t response_turn = 0;
  std::vector<Turn> context;
  std::vector<TripletChain> cs_chains;
  std::vector<Provenance> provenance;  // parallel to cs_chains
  std::string response;
  std::vector<std::string> context_keywords;
  std::vector<std::string> response_keywords;
};

struct DialogueStats {
  std::size_t dialogues = 0;
  std::size_t skipped_dialogues = 0;  // no system turn after a first turn
  std::size_t records = 0;
  std::size_t records_with_cs = 0;
  std::size_t context_only = 0;
  std::size_t context_response = 0;
  std::size_t both_sides = 0;

  std::size_t chains() const {
    return context_only + context_response + both_sides;
  }
  // Percentages over all chains; zero when there are none.
  double context_only_pct() const;
  double context_response_pct() const;
  double both_sides_pct() const;

  nlohmann::json to_json() const;
};

struct DialogueOptions {
  std::size_t max_context_turns = 3;
  ExtractionThresholds thresholds;
  std::size_t workers = 1;
};

struct DialogueBuild {
  std::vector<DialogueRecord> records;
  DialogueStats stats;
};

// Keyword statistics with one document per turn of every dialogue.
CorpusStats dialogue_stats(std::span<const Dialogue> dialogues);

DialogueBuild build_records(std::span<const Dialogue> dialogues,
                            const ConceptGraph& graph,
                            const SimilarityCache& similarity,
                            const KeywordMiner& miner, const CorpusStats& stats,
                            const DialogueOptions& options = {});

// (input, target). Only the last `max_context_turns` context turns are
// written.
std::pair<std::string, std::string> serialize_record(
    const DialogueRecord& record, std::size_t max_context_turns = 3);

// Splits a serialized target at the first response marker into the
// commonsense segment and the response text.
std::pair<std::string_view, std::string_view> split_target(
    std::string_view target);

// {"id", "turn", "input", "target", "chains", "provenance"}
nlohmann::json dialogue_record_to_json(const DialogueRecord& record,
                                       std::size_t max_context_turns = 3);

}  // namespace cskg

#endif  // CSKG_DIALOGUE_BUILDER_H_
