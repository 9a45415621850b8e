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

// Assertion store for a ConceptNet-style commonsense graph.
//
// Assertions keep their stored (head, relation, tail) orientation, while the
// adjacency index is symmetric: every assertion is reachable from both of its
// endpoints. Neighbor lists follow the insertion order of the assertions, so
// everything built on top of them is deterministic. A graph is immutable once
// built and may be shared across threads.

#ifndef CSKG_KG_STORE_H_
#define CSKG_KG_STORE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cskg/relation.h"

namespace cskg {

class EmbeddingStore;

using ConceptId = std::uint32_t;
using AssertionId = std::uint32_t;

struct Assertion {
  ConceptId head = 0;
  Relation relation = Relation::kRelatedTo;
  ConceptId tail = 0;
  double weight = 0.0;
  // Embedding cosine between head and tail; set by filter_graph.
  std::optional<double> sim_weight;
};

// One adjacency entry seen from a concept.
struct Neighbor {
  ConceptId concept_id = 0;
  AssertionId assertion = 0;
  // True when the queried concept is the stored head of the assertion.
  bool forward = true;
};

// Shortest-path distance capped at two hops.
enum class HopDistance : int {
  kSame = 0,
  kAdjacent = 1,
  kTwoHops = 2,
  kFar = 3
};

struct MatchReport {
  bool pair_exists = false;
  bool assertion_exists = false;
};

class ConceptGraph {
 public:
  class Builder;

  ConceptGraph() = default;

  std::size_t concept_count() const { return surfaces_.size(); }
  std::size_t assertion_count() const { return assertions_.size(); }
  bool empty() const { return assertions_.empty(); }

  const std::string& surface(ConceptId id) const { return surfaces_[id]; }

  // Looks up a concept by its label. The label is normalized first.
  std::optional<ConceptId> find(std::string_view label) const;

  const Assertion& assertion(AssertionId id) const { return assertions_[id]; }
  std::span<const Assertion> assertions() const { return assertions_; }

  // Adjacency entries of `id` in insertion order. Parallel edges appear once
  // per assertion.
  std::span<const Neighbor> neighbors(ConceptId id) const {
    return {adjacency_.data() + offsets_[id],
            adjacency_.data() + offsets_[id + 1]};
  }

  // Distinct neighbor ids of `id`, sorted ascending.
  std::span<const ConceptId> neighbor_set(ConceptId id) const {
    return {neighbor_ids_.data() + set_offsets_[id],
            neighbor_ids_.data() + set_offsets_[id + 1]};
  }

  bool adjacent(ConceptId a, ConceptId b) const;

 private:
  std::vector<std::string> surfaces_;
  std::unordered_map<std::string, ConceptId> index_;
  std::vector<Assertion> assertions_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> adjacency_;
  std::vector<std::size_t> set_offsets_{0};
  std::vector<ConceptId> neighbor_ids_;
};

class ConceptGraph::Builder {
 public:
  // Returns the id for an already-normalized surface, interning it if new.
  ConceptId intern(const std::string& surface);

  // Appends an assertion between normalized surfaces. Self-loops are
  // rejected and false is returned.
  bool add(const std::string& head, Relation relation, const std::string& tail,
           double weight, std::optional<double> sim_weight = std::nullopt);

  std::size_t assertion_count() const { return assertions_.size(); }

  ConceptGraph build() &&;

 private:
  std::vector<std::string> surfaces_;
  std::unordered_map<std::string, ConceptId> index_;
  std::vector<Assertion> assertions_;
};

struct LoadReport {
  std::size_t rows_read = 0;
  std::size_t loaded = 0;
  std::size_t malformed = 0;
  std::size_t unmapped_relation = 0;
  std::size_t language_mismatch = 0;
  std::size_t invalid_concept = 0;
  std::size_t self_loops = 0;
  // First few malformed rows as "line N: reason".
  std::vector<std::string> malformed_samples;

  std::size_t skipped() const {
    return malformed + unmapped_relation + language_mismatch + invalid_concept +
           self_loops;
  }
  nlohmann::json to_json() const;
};

// Reads an assertion dump. Two row layouts are accepted, detected per row:
//   ConceptNet CSV: uri <TAB> /r/Rel <TAB> /c/lang/head[/...] <TAB>
//                   /c/lang/tail[/...] <TAB> {"weight": w, ...}
//   compact:        head <TAB> Relation <TAB> tail <TAB> weight [<TAB> sim]
// `lang_filter` applies to ConceptNet rows only; empty accepts every language.
// Throws IngestionError if the file cannot be read and EmptyInputError if no
// assertion survives.
ConceptGraph load_assertions(const std::filesystem::path& path,
                             std::string_view lang_filter = "en",
                             LoadReport* report = nullptr);

// Writes the compact layout including the sim column when present. Loading
// the file back reproduces the graph, including neighbor order.
void save_compact(const ConceptGraph& graph, const std::filesystem::path& path);

struct FilterOptions {
  double min_weight = 1.0;
  double min_sim = 0.0;
};

struct FilterReport {
  std::size_t input = 0;
  std::size_t kept = 0;
  std::size_t low_weight = 0;
  std::size_t missing_embedding = 0;
  std::size_t low_similarity = 0;

  nlohmann::json to_json() const;
};

// Keeps assertions with weight >= min_weight and cosine >= min_sim, and
// records the cosine as sim_weight. Assertions whose endpoints have no
// embedding are dropped. The result may be empty.
ConceptGraph filter_graph(const ConceptGraph& graph,
                          const EmbeddingStore& embeddings,
                          const FilterOptions& options = {},
                          FilterReport* report = nullptr);

// Adjacency entries of a concept label; empty for unknown labels.
std::vector<Neighbor> neighbors(const ConceptGraph& graph,
                                std::string_view label);

HopDistance hop_distance(const ConceptGraph& graph, ConceptId t, ConceptId x);

// pair_exists: some assertion links head and tail in either direction.
// assertion_exists: an assertion (head, relation, tail) exists in the stored
// direction, or in either direction when `either_direction` is set. Without a
// relation only pair_exists is computed.
MatchReport lookup(const ConceptGraph& graph, std::string_view head,
                   std::string_view tail,
                   std::optional<Relation> relation = std::nullopt,
                   bool either_direction = false);

}  // namespace cskg

#endif  // CSKG_KG_STORE_H_
