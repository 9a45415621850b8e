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

#include "cskg/kg_store.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

#include "cskg/embedding_store.h"
#include "cskg/error.h"
#include "cskg/text.h"

namespace cskg {
namespace {

constexpr std::size_t kMaxMalformedSamples = 20;

bool parse_double(std::string_view s, double* out) {
  s = trim(s);
  const auto result = std::from_chars(s.data(), s.data() + s.size(), *out);
  return result.ec == std::errc() && result.ptr == s.data() + s.size();
}

std::string format_double(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

// "/c/en/ice_cream/n/..." -> {"en", "ice_cream"}.
bool split_concept_uri(std::string_view uri, std::string_view* lang,
                       std::string_view* term) {
  if (!uri.starts_with("/c/")) return false;
  const auto parts = split(uri.substr(3), '/');
  if (parts.size() < 2 || parts[0].empty() || parts[1].empty()) return false;
  *lang = parts[0];
  *term = parts[1];
  return true;
}

enum class RowStatus {
  kLoaded,
  kMalformed,
  kUnmapped,
  kLanguage,
  kInvalidConcept,
  kSelfLoop,
};

struct ParsedRow {
  std::string head;
  Relation relation = Relation::kRelatedTo;
  std::string tail;
  double weight = 0.0;
  std::optional<double> sim;
};

RowStatus parse_row(std::string_view line, std::string_view lang_filter,
                    ParsedRow* row, std::string* reason) {
  const auto fields = split(line, '\t');
  // ConceptNet rows carry concept URIs; compact rows may still spell the
  // relation as /r/Name.
  const bool conceptnet = fields.size() >= 5 && fields[1].starts_with("/r/") &&
                          fields[2].starts_with("/c/");
  std::string_view head_label;
  std::string_view tail_label;
  std::string head_decoded;
  std::string tail_decoded;

  if (conceptnet) {
    std::string_view head_lang, tail_lang, head_term, tail_term;
    if (!split_concept_uri(fields[2], &head_lang, &head_term) ||
        !split_concept_uri(fields[3], &tail_lang, &tail_term)) {
      *reason = "bad concept URI";
      return RowStatus::kMalformed;
    }
    const auto meta = nlohmann::json::parse(fields[4], nullptr, false);
    if (meta.is_discarded() || !meta.is_object() || !meta.contains("weight") ||
        !meta["weight"].is_number()) {
      *reason = "metadata without numeric weight";
      return RowStatus::kMalformed;
    }
    row->weight = meta["weight"].get<double>();
    const auto relation = relation_from_conceptnet(fields[1]);
    if (!relation) return RowStatus::kUnmapped;
    row->relation = *relation;
    if (!lang_filter.empty() &&
        (head_lang != lang_filter || tail_lang != lang_filter)) {
      return RowStatus::kLanguage;
    }
    head_decoded = percent_decode(head_term);
    tail_decoded = percent_decode(tail_term);
    head_label = head_decoded;
    tail_label = tail_decoded;
  } else if (fields.size() == 4 || fields.size() == 5) {
    if (!parse_double(fields[3], &row->weight)) {
      *reason = "bad weight";
      return RowStatus::kMalformed;
    }
    if (fields.size() == 5 && !trim(fields[4]).empty()) {
      double sim = 0.0;
      if (!parse_double(fields[4], &sim)) {
        *reason = "bad similarity";
        return RowStatus::kMalformed;
      }
      row->sim = sim;
    }
    const auto relation = relation_from_conceptnet(trim(fields[1]));
    if (!relation) return RowStatus::kUnmapped;
    row->relation = *relation;
    head_label = fields[0];
    tail_label = fields[2];
  } else {
    *reason = "expected 4-5 compact fields or 5 ConceptNet fields, got " +
              std::to_string(fields.size());
    return RowStatus::kMalformed;
  }

  if (!std::isfinite(row->weight) || row->weight < 0.0) {
    *reason = "negative or non-finite weight";
    return RowStatus::kMalformed;
  }
  auto head = normalize_concept(head_label);
  auto tail = normalize_concept(tail_label);
  if (!head || !tail) return RowStatus::kInvalidConcept;
  if (*head == *tail) return RowStatus::kSelfLoop;
  row->head = std::move(*head);
  row->tail = std::move(*tail);
  return RowStatus::kLoaded;
}

}  // namespace

std::optional<ConceptId> ConceptGraph::find(std::string_view label) const {
  const auto normalized = normalize_concept(label);
  if (!normalized) return std::nullopt;
  const auto it = index_.find(*normalized);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool ConceptGraph::adjacent(ConceptId a, ConceptId b) const {
  const auto set = neighbor_set(a);
  return std::binary_search(set.begin(), set.end(), b);
}

ConceptId ConceptGraph::Builder::intern(const std::string& surface) {
  const auto [it, inserted] =
      index_.emplace(surface, static_cast<ConceptId>(surfaces_.size()));
  if (inserted) surfaces_.push_back(surface);
  return it->second;
}

bool ConceptGraph::Builder::add(const std::string& head, Relation relation,
                                const std::string& tail, double weight,
                                std::optional<double> sim_weight) {
  if (head == tail) return false;
  const ConceptId h = intern(head);
  const ConceptId t = intern(tail);
  assertions_.push_back(Assertion{h, relation, t, weight, sim_weight});
  return true;
}

ConceptGraph ConceptGraph::Builder::build() && {
  ConceptGraph graph;
  const std::size_t n = surfaces_.size();
  std::vector<std::size_t> degree(n, 0);
  for (const Assertion& a : assertions_) {
    ++degree[a.head];
    ++degree[a.tail];
  }
  graph.offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    graph.offsets_[i + 1] = graph.offsets_[i] + degree[i];
  }
  graph.adjacency_.resize(graph.offsets_[n]);
  std::vector<std::size_t> cursor(graph.offsets_.begin(),
                                  graph.offsets_.end() - 1);
  for (std::size_t i = 0; i < assertions_.size(); ++i) {
    const Assertion& a = assertions_[i];
    const auto id = static_cast<AssertionId>(i);
    graph.adjacency_[cursor[a.head]++] = Neighbor{a.tail, id, true};
    graph.adjacency_[cursor[a.tail]++] = Neighbor{a.head, id, false};
  }

  graph.set_offsets_.assign(n + 1, 0);
  std::vector<ConceptId> scratch;
  for (std::size_t i = 0; i < n; ++i) {
    scratch.clear();
    for (std::size_t k = graph.offsets_[i]; k < graph.offsets_[i + 1]; ++k) {
      scratch.push_back(graph.adjacency_[k].concept_id);
    }
    std::sort(scratch.begin(), scratch.end());
    scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
    graph.neighbor_ids_.insert(graph.neighbor_ids_.end(), scratch.begin(),
                               scratch.end());
    graph.set_offsets_[i + 1] = graph.neighbor_ids_.size();
  }

  graph.surfaces_ = std::move(surfaces_);
  graph.index_ = std::move(index_);
  graph.assertions_ = std::move(assertions_);
  return graph;
}

nlohmann::json LoadReport::to_json() const {
  return {
      {"rows_read", rows_read},
      {"loaded", loaded},
      {"skipped",
       {{"malformed", malformed},
        {"unmapped_relation", unmapped_relation},
        {"language_mismatch", language_mismatch},
        {"invalid_concept", invalid_concept},
        {"self_loop", self_loops}}},
      {"malformed_samples", malformed_samples},
  };
}

ConceptGraph load_assertions(const std::filesystem::path& path,
                             std::string_view lang_filter, LoadReport* report) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open assertion dump " + path.string());
  LoadReport local;
  LoadReport& r = report != nullptr ? *report : local;
  r = LoadReport{};

  ConceptGraph::Builder builder;
  std::string line;
  std::size_t line_no = 0;
  ParsedRow row;
  std::string reason;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || line.front() == '#') continue;
    ++r.rows_read;
    row = ParsedRow{};
    reason.clear();
    switch (parse_row(line, lang_filter, &row, &reason)) {
      case RowStatus::kLoaded:
        builder.add(row.head, row.relation, row.tail, row.weight, row.sim);
        ++r.loaded;
        break;
      case RowStatus::kMalformed:
        ++r.malformed;
        if (r.malformed_samples.size() < kMaxMalformedSamples) {
          r.malformed_samples.push_back("line " + std::to_string(line_no) +
                                        ": " + reason);
        }
        break;
      case RowStatus::kUnmapped:
        ++r.unmapped_relation;
        break;
      case RowStatus::kLanguage:
        ++r.language_mismatch;
        break;
      case RowStatus::kInvalidConcept:
        ++r.invalid_concept;
        break;
      case RowStatus::kSelfLoop:
        ++r.self_loops;
        break;
    }
  }
  if (in.bad()) throw IngestionError("read error on " + path.string());
  if (r.loaded == 0) {
    throw EmptyInputError("no assertion loaded from " + path.string());
  }
  return std::move(builder).build();
}

void save_compact(const ConceptGraph& graph,
                  const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IngestionError("cannot write " + path.string());
  for (const Assertion& a : graph.assertions()) {
    out << graph.surface(a.head) << '\t' << name_of(a.relation) << '\t'
        << graph.surface(a.tail) << '\t' << format_double(a.weight);
    if (a.sim_weight) out << '\t' << format_double(*a.sim_weight);
    out << '\n';
  }
  if (!out) throw IngestionError("write error on " + path.string());
}

nlohmann::json FilterReport::to_json() const {
  return {
      {"input", input},
      {"kept", kept},
      {"dropped",
       {{"low_weight", low_weight},
        {"missing_embedding", missing_embedding},
        {"low_similarity", low_similarity}}},
  };
}

ConceptGraph filter_graph(const ConceptGraph& graph,
                          const EmbeddingStore& embeddings,
                          const FilterOptions& options, FilterReport* report) {
  FilterReport local;
  FilterReport& r = report != nullptr ? *report : local;
  r = FilterReport{};
  r.input = graph.assertion_count();

  SimilarityCache cache(embeddings);
  ConceptGraph::Builder builder;
  for (const Assertion& a : graph.assertions()) {
    if (a.weight < options.min_weight) {
      ++r.low_weight;
      continue;
    }
    const auto sim = cache.cosine(graph.surface(a.head), graph.surface(a.tail));
    if (!sim) {
      ++r.missing_embedding;
      continue;
    }
    if (*sim < options.min_sim) {
      ++r.low_similarity;
      continue;
    }
    builder.add(graph.surface(a.head), a.relation, graph.surface(a.tail),
                a.weight, *sim);
    ++r.kept;
  }
  return std::move(builder).build();
}

std::vector<Neighbor> neighbors(const ConceptGraph& graph,
                                std::string_view label) {
  const auto id = graph.find(label);
  if (!id) return {};
  const auto span = graph.neighbors(*id);
  return {span.begin(), span.end()};
}

HopDistance hop_distance(const ConceptGraph& graph, ConceptId t, ConceptId x) {
  if (t == x) return HopDistance::kSame;
  if (graph.adjacent(t, x)) return HopDistance::kAdjacent;
  const auto a = graph.neighbor_set(t);
  const auto b = graph.neighbor_set(x);
  // Both sets are sorted: a linear merge finds a common neighbor.
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return HopDistance::kTwoHops;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return HopDistance::kFar;
}

MatchReport lookup(const ConceptGraph& graph, std::string_view head,
                   std::string_view tail, std::optional<Relation> relation,
                   bool either_direction) {
  MatchReport report;
  const auto h = graph.find(head);
  const auto t = graph.find(tail);
  if (!h || !t) return report;
  for (const Neighbor& n : graph.neighbors(*h)) {
    if (n.concept_id != *t) continue;
    report.pair_exists = true;
    if (!relation) break;
    const Assertion& a = graph.assertion(n.assertion);
    if (a.relation == *relation && (n.forward || either_direction)) {
      report.assertion_exists = true;
      break;
    }
  }
  return report;
}

}  // namespace cskg
