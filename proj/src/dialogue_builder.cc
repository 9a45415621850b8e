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

#include "cskg/dialogue_builder.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <nlohmann/json.hpp>
#include <unordered_map>

#include "cskg/error.h"
#include "cskg/parallel.h"
#include "cskg/text.h"

namespace cskg {
namespace {

std::optional<Speaker> parse_speaker(std::string label) {
  label = to_lower(trim(label));
  if (label == "user" || label == "[user]") return Speaker::kUser;
  if (label == "system" || label == "[system]") return Speaker::kSystem;
  return std::nullopt;
}

double pct(std::size_t part, std::size_t whole) {
  return whole == 0
             ? 0.0
             : 100.0 * static_cast<double>(part) / static_cast<double>(whole);
}

void append_unique(const std::vector<std::string>& from,
                   std::vector<std::string>* to) {
  for (const std::string& s : from) {
    if (std::find(to->begin(), to->end(), s) == to->end()) to->push_back(s);
  }
}

struct ChainTally {
  TripletChain chain;
  bool from_context = false;
  bool from_response = false;
};

DialogueRecord make_record(const Dialogue& dialogue, std::size_t turn,
                           const ConceptGraph& graph,
                           const SimilarityCache& similarity,
                           const KeywordMiner& miner, const CorpusStats& stats,
                           const DialogueOptions& options) {
  DialogueRecord record;
  record.dialogue_id = dialogue.id;
  record.response_turn = turn;
  const std::size_t first =
      turn > options.max_context_turns ? turn - options.max_context_turns : 0;
  record.context.assign(
      dialogue.turns.begin() + static_cast<std::ptrdiff_t>(first),
      dialogue.turns.begin() + static_cast<std::ptrdiff_t>(turn));
  record.response = dialogue.turns[turn].text;

  for (const Turn& t : record.context) {
    append_unique(miner.extract(t.text, stats, &graph).texts(),
                  &record.context_keywords);
  }
  record.response_keywords =
      miner.extract(record.response, stats, &graph).texts();

  std::vector<ChainTally> tallies;
  std::unordered_map<std::string, std::size_t> by_text;
  auto add = [&](const std::string& a, const std::string& b, bool response) {
    if (a == b) return;
    const auto found =
        extract_pair(graph, similarity, a, b, options.thresholds);
    if (!found) return;
    const std::string key = to_string(found->chain);
    auto [it, inserted] = by_text.emplace(key, tallies.size());
    if (inserted) tallies.push_back(ChainTally{found->chain});
    ChainTally& tally = tallies[it->second];
    (response ? tally.from_response : tally.from_context) = true;
  };
  const auto& ctx = record.context_keywords;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    for (std::size_t j = i + 1; j < ctx.size(); ++j) add(ctx[i], ctx[j], false);
  }
  for (const std::string& c : ctx) {
    for (const std::string& r : record.response_keywords) add(c, r, true);
  }

  for (ChainTally& t : tallies) {
    record.cs_chains.push_back(std::move(t.chain));
    if (t.from_context && t.from_response) {
      record.provenance.push_back(Provenance::kBothSides);
    } else if (t.from_context) {
      record.provenance.push_back(Provenance::kContextOnly);
    } else {
      record.provenance.push_back(Provenance::kContextResponse);
    }
  }
  return record;
}

}  // namespace

std::vector<Dialogue> read_dialogues(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open dialogue file " + path.string());
  const auto root = nlohmann::json::parse(in, nullptr, false);
  if (root.is_discarded() || !root.is_object()) {
    throw IngestionError("dialogue file must hold a JSON object: " +
                         path.string());
  }
  std::vector<Dialogue> dialogues;
  for (const auto& [id, value] : root.items()) {
    Dialogue d;
    d.id = id;
    try {
      const auto& turns = value.is_array() ? value : value.at("turns");
      std::vector<std::string> speakers;
      if (value.is_object() && value.contains("speakers")) {
        speakers = value.at("speakers").get<std::vector<std::string>>();
        if (speakers.size() != turns.size()) {
          throw IngestionError("dialogue " + id +
                               ": speakers and turns differ in length");
        }
      }
      for (std::size_t i = 0; i < turns.size(); ++i) {
        Turn t;
        t.text = turns[i].get<std::string>();
        if (speakers.empty()) {
          t.speaker = i % 2 == 0 ? Speaker::kUser : Speaker::kSystem;
        } else {
          const auto s = parse_speaker(speakers[i]);
          if (!s) {
            throw IngestionError("dialogue " + id + ": unknown speaker '" +
                                 speakers[i] + "'");
          }
          t.speaker = *s;
        }
        d.turns.push_back(std::move(t));
      }
    } catch (const nlohmann::json::exception& e) {
      throw IngestionError("dialogue " + id + ": " + e.what());
    }
    dialogues.push_back(std::move(d));
  }
  return dialogues;
}

std::string_view provenance_name(Provenance provenance) {
  switch (provenance) {
    case Provenance::kContextOnly:
      return "context-only";
    case Provenance::kContextResponse:
      return "context-response";
    case Provenance::kBothSides:
      return "both-sides";
  }
  return "context-only";
}

double DialogueStats::context_only_pct() const {
  return pct(context_only, chains());
}

double DialogueStats::context_response_pct() const {
  return pct(context_response, chains());
}

double DialogueStats::both_sides_pct() const {
  return pct(both_sides, chains());
}

nlohmann::json DialogueStats::to_json() const {
  return {{"dialogues", dialogues},
          {"skipped_dialogues", skipped_dialogues},
          {"records", records},
          {"records_with_cs", records_with_cs},
          {"chains", chains()},
          {"counts",
           {{"context-only", context_only},
            {"context-response", context_response},
            {"both-sides", both_sides}}},
          {"percent",
           {{"context-only", context_only_pct()},
            {"context-response", context_response_pct()},
            {"both-sides", both_sides_pct()}}}};
}

CorpusStats dialogue_stats(std::span<const Dialogue> dialogues) {
  std::vector<std::string> docs;
  for (const Dialogue& d : dialogues) {
    for (const Turn& t : d.turns) docs.push_back(t.text);
  }
  return build_stats(docs);
}

DialogueBuild build_records(std::span<const Dialogue> dialogues,
                            const ConceptGraph& graph,
                            const SimilarityCache& similarity,
                            const KeywordMiner& miner, const CorpusStats& stats,
                            const DialogueOptions& options) {
  std::vector<std::vector<DialogueRecord>> per_dialogue(dialogues.size());
  parallel_for(dialogues.size(), options.workers, [&](std::size_t i) {
    const Dialogue& d = dialogues[i];
    for (std::size_t turn = 1; turn < d.turns.size(); ++turn) {
      if (d.turns[turn].speaker != Speaker::kSystem) continue;
      per_dialogue[i].push_back(
          make_record(d, turn, graph, similarity, miner, stats, options));
    }
  });

  DialogueBuild build;
  DialogueStats& s = build.stats;
  s.dialogues = dialogues.size();
  for (auto& records : per_dialogue) {
    if (records.empty()) ++s.skipped_dialogues;
    for (DialogueRecord& r : records) {
      if (!r.cs_chains.empty()) ++s.records_with_cs;
      for (Provenance p : r.provenance) {
        switch (p) {
          case Provenance::kContextOnly:
            ++s.context_only;
            break;
          case Provenance::kContextResponse:
            ++s.context_response;
            break;
          case Provenance::kBothSides:
            ++s.both_sides;
            break;
        }
      }
      build.records.push_back(std::move(r));
    }
  }
  s.records = build.records.size();
  return build;
}

std::pair<std::string, std::string> serialize_record(
    const DialogueRecord& record, std::size_t max_context_turns) {
  std::string input;
  const std::size_t n = record.context.size();
  const std::size_t first = n > max_context_turns ? n - max_context_turns : 0;
  for (std::size_t i = first; i < n; ++i) {
    if (!input.empty()) input.push_back(' ');
    const Turn& t = record.context[i];
    input.append(t.speaker == Speaker::kUser ? kUserMarker : kSystemMarker);
    input.push_back(' ');
    input.append(t.text);
  }
  std::string target;
  if (!record.cs_chains.empty()) {
    target = commonsense_text(record.cs_chains);
    target.push_back(' ');
  }
  target.append(kSystemMarker);
  target.push_back(' ');
  target.append(record.response);
  return {std::move(input), std::move(target)};
}

std::pair<std::string_view, std::string_view> split_target(
    std::string_view target) {
  const std::size_t pos = target.find(kSystemMarker);
  if (pos == std::string_view::npos) return {target, {}};
  return {trim(target.substr(0, pos)),
          trim(target.substr(pos + kSystemMarker.size()))};
}

nlohmann::json dialogue_record_to_json(const DialogueRecord& record,
                                       std::size_t max_context_turns) {
  auto [input, target] = serialize_record(record, max_context_turns);
  nlohmann::json chains = nlohmann::json::array();
  for (const TripletChain& c : record.cs_chains) chains.push_back(to_string(c));
  nlohmann::json provenance = nlohmann::json::array();
  for (Provenance p : record.provenance) {
    provenance.push_back(std::string(provenance_name(p)));
  }
  return {{"id", record.dialogue_id},    {"turn", record.response_turn},
          {"input", std::move(input)},   {"target", std::move(target)},
          {"chains", std::move(chains)}, {"provenance", std::move(provenance)}};
}

}  // namespace cskg
