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

#include "cskg/cs_extractor.h"

#include <fstream>
#include <nlohmann/json.hpp>
#include <tuple>
#include <unordered_set>

#include "cskg/error.h"
#include "cskg/parallel.h"
#include "cskg/text.h"

namespace cskg {
namespace {

Triplet stored_triplet(const ConceptGraph& graph, AssertionId id) {
  const Assertion& a = graph.assertion(id);
  return Triplet{graph.surface(a.head), a.relation, graph.surface(a.tail)};
}

// Tie-break key for an edge seen from `n`'s owner: relation name, then the
// stored orientation starting at the owner, then assertion order.
auto edge_key(const ConceptGraph& graph, const Neighbor& n) {
  return std::make_tuple(name_of(graph.assertion(n.assertion).relation),
                         !n.forward, n.assertion);
}

std::optional<PairExtraction> one_hop(const ConceptGraph& graph, ConceptId a,
                                      ConceptId b) {
  const Neighbor* best = nullptr;
  for (const Neighbor& n : graph.neighbors(a)) {
    if (n.concept_id != b) continue;
    if (best == nullptr) {
      best = &n;
      continue;
    }
    const double w = graph.assertion(n.assertion).weight;
    const double bw = graph.assertion(best->assertion).weight;
    if (w > bw || (w == bw && edge_key(graph, n) < edge_key(graph, *best))) {
      best = &n;
    }
  }
  if (best == nullptr) return std::nullopt;
  PairExtraction out;
  out.kind = HopKind::kOneHop;
  out.chain.triplets.push_back(stored_triplet(graph, best->assertion));
  out.score = graph.assertion(best->assertion).weight;
  return out;
}

bool passes(const std::optional<double>& sim, double gate) {
  return sim && *sim > gate;
}

}  // namespace

std::optional<PairExtraction> extract_pair(
    const ConceptGraph& graph, const SimilarityCache& similarity,
    std::string_view a, std::string_view b,
    const ExtractionThresholds& thresholds) {
  const auto ia = graph.find(a);
  const auto ib = graph.find(b);
  if (!ia || !ib || *ia == *ib) return std::nullopt;
  if (auto direct = one_hop(graph, *ia, *ib)) return direct;

  const std::string& sa = graph.surface(*ia);
  const std::string& sb = graph.surface(*ib);
  const auto gate = similarity.cosine(sa, sb);
  if (!gate || *gate < thresholds.pair_gate) return std::nullopt;

  struct Candidate {
    double score;
    ConceptId middle;
    const Neighbor* first;   // seen from a
    const Neighbor* second;  // seen from the middle
  };
  std::optional<Candidate> best;
  auto better = [&](const Candidate& x, const Candidate& y) {
    if (x.score != y.score) return x.score > y.score;
    const std::string& mx = graph.surface(x.middle);
    const std::string& my = graph.surface(y.middle);
    if (mx != my) return mx < my;
    const auto kx =
        std::make_tuple(edge_key(graph, *x.first), edge_key(graph, *x.second));
    const auto ky =
        std::make_tuple(edge_key(graph, *y.first), edge_key(graph, *y.second));
    return kx < ky;
  };

  const auto set_a = graph.neighbor_set(*ia);
  const auto set_b = graph.neighbor_set(*ib);
  auto i = set_a.begin();
  auto j = set_b.begin();
  while (i != set_a.end() && j != set_b.end()) {
    if (*i < *j) {
      ++i;
      continue;
    }
    if (*j < *i) {
      ++j;
      continue;
    }
    const ConceptId m = *i;
    ++i;
    ++j;
    const std::string& sm = graph.surface(m);
    if (!passes(similarity.cosine(sm, sa), thresholds.middle_gate) &&
        !passes(similarity.cosine(sm, sb), thresholds.middle_gate)) {
      continue;
    }
    for (const Neighbor& e1 : graph.neighbors(*ia)) {
      if (e1.concept_id != m) continue;
      const double w1 = graph.assertion(e1.assertion).weight;
      for (const Neighbor& e2 : graph.neighbors(m)) {
        if (e2.concept_id != *ib) continue;
        Candidate c{w1 + graph.assertion(e2.assertion).weight, m, &e1, &e2};
        if (!best || better(c, *best)) best = c;
      }
    }
  }
  if (!best) return std::nullopt;
  PairExtraction out;
  out.kind = HopKind::kTwoHop;
  out.middle = graph.surface(best->middle);
  out.score = best->score;
  out.chain.triplets.push_back(stored_triplet(graph, best->first->assertion));
  out.chain.triplets.push_back(stored_triplet(graph, best->second->assertion));
  return out;
}

ConceptSet::ConceptSet(const std::vector<std::string>& labels) {
  if (labels.size() < 2 || labels.size() > 8) {
    throw InvalidArgumentError("concept set needs 2..8 concepts, got " +
                               std::to_string(labels.size()));
  }
  std::unordered_set<std::string> seen;
  for (const std::string& label : labels) {
    auto c = normalize_concept(label);
    if (!c) throw InvalidArgumentError("invalid concept '" + label + "'");
    if (!seen.insert(*c).second) {
      throw InvalidArgumentError("duplicate concept '" + *c + "'");
    }
    concepts_.push_back(std::move(*c));
  }
}

std::vector<TripletChain> ExtractionResult::chains() const {
  std::vector<TripletChain> out;
  for (const PairResult& p : pairs) {
    if (p.extraction) out.push_back(p.extraction->chain);
  }
  return out;
}

bool ExtractionResult::empty() const {
  for (const PairResult& p : pairs) {
    if (p.extraction) return false;
  }
  return true;
}

std::size_t ExtractionResult::triplet_count() const {
  std::size_t n = 0;
  for (const PairResult& p : pairs) {
    if (p.extraction) n += p.extraction->chain.triplets.size();
  }
  return n;
}

std::string ExtractionResult::joined() const { return join_chains(chains()); }

std::string ExtractionResult::terminated() const {
  return terminate_chains(chains());
}

ExtractionResult extract_set(const ConceptGraph& graph,
                             const SimilarityCache& similarity,
                             std::span<const std::string> concepts,
                             const ExtractionThresholds& thresholds) {
  ExtractionResult result;
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    for (std::size_t j = i + 1; j < concepts.size(); ++j) {
      PairResult p;
      p.a = concepts[i];
      p.b = concepts[j];
      p.unknown_concept = !graph.find(p.a) || !graph.find(p.b);
      if (!p.unknown_concept) {
        p.extraction = extract_pair(graph, similarity, p.a, p.b, thresholds);
      }
      result.pairs.push_back(std::move(p));
    }
  }
  return result;
}

ExtractionResult extract_set(const ConceptGraph& graph,
                             const SimilarityCache& similarity,
                             const ConceptSet& concepts,
                             const ExtractionThresholds& thresholds) {
  return extract_set(graph, similarity, concepts.concepts(), thresholds);
}

std::string commonsense_text(std::span<const TripletChain> chains) {
  if (chains.empty()) return {};
  return std::string(kCommonsenseToken) + " " + terminate_chains(chains);
}

std::vector<CommonGenEntry> read_commongen(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open CommonGen file " + path.string());
  std::vector<CommonGenEntry> entries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto j = nlohmann::json::parse(line, nullptr, false);
    const std::string where = path.string() + ":" + std::to_string(line_no);
    if (j.is_discarded() || !j.is_object()) {
      throw IngestionError("invalid JSON at " + where);
    }
    CommonGenEntry entry;
    try {
      if (j.contains("concepts")) {
        entry.concepts = j.at("concepts").get<std::vector<std::string>>();
      } else {
        for (std::string_view c :
             split(j.at("concept_set").get<std::string>(), '#')) {
          entry.concepts.emplace_back(c);
        }
      }
      const char* key = j.contains("sentences") ? "sentences" : "scene";
      entry.sentences = j.at(key).get<std::vector<std::string>>();
    } catch (const nlohmann::json::exception&) {
      throw IngestionError("missing concepts or sentences at " + where);
    }
    entries.push_back(std::move(entry));
  }
  return entries;
}

std::string_view direction_name(Direction direction) {
  return direction == Direction::kCsToSentence ? "cs2sentence" : "sentence2cs";
}

double TwoWayStats::mean_triplets() const {
  return pairs == 0
             ? 0.0
             : static_cast<double>(triplets) / static_cast<double>(pairs);
}

nlohmann::json TwoWayStats::to_json() const {
  return {{"entries", entries},
          {"skipped_entries", skipped_entries},
          {"invalid_entries", invalid_entries},
          {"unknown_concept_pairs", unknown_concepts},
          {"triplet_sentence_pairs", pairs},
          {"records", records},
          {"mean_cs_triplets", mean_triplets()}};
}

TwoWayBuild build_two_way(std::span<const CommonGenEntry> entries,
                          const ConceptGraph& graph,
                          const SimilarityCache& similarity,
                          const ExtractionThresholds& thresholds,
                          std::size_t workers) {
  struct Slot {
    bool valid = false;
    ExtractionResult result;
  };
  std::vector<Slot> slots(entries.size());
  parallel_for(entries.size(), workers, [&](std::size_t i) {
    try {
      const ConceptSet set(entries[i].concepts);
      slots[i].result = extract_set(graph, similarity, set, thresholds);
      slots[i].valid = true;
    } catch (const InvalidArgumentError&) {
      slots[i].valid = false;
    }
  });

  TwoWayBuild build;
  TwoWayStats& stats = build.stats;
  stats.entries = entries.size();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!slots[i].valid) {
      ++stats.invalid_entries;
      continue;
    }
    const ExtractionResult& result = slots[i].result;
    for (const PairResult& p : result.pairs) {
      if (p.unknown_concept) ++stats.unknown_concepts;
    }
    if (result.empty()) {
      ++stats.skipped_entries;
      continue;
    }
    const std::string cs = commonsense_text(result.chains());
    const std::size_t triplets = result.triplet_count();
    for (const std::string& sentence : entries[i].sentences) {
      build.records.push_back({Direction::kCsToSentence, cs, sentence});
      build.records.push_back({Direction::kSentenceToCs, sentence, cs});
      ++stats.pairs;
      stats.triplets += triplets;
    }
  }
  stats.records = build.records.size();
  return build;
}

nlohmann::json record_to_json(const TwoWayRecord& record) {
  return {{"direction", std::string(direction_name(record.direction))},
          {"input", record.input},
          {"target", record.target}};
}

}  // namespace cskg
