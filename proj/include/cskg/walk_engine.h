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

// Second-order biased random walks over a ConceptGraph.
//
// A walk that just moved t -> v picks its next concept x among the
// adjacency entries of v with unnormalized weight
//
//   pi(v, x) = alpha(t, x) * w(v, x)
//
// where w is the embedding cosine stored on the assertion and
// alpha = 1/p, 1, 1/q for hop_distance(t, x) = 0, 1, 2. The first step has
// no previous concept and uses pi = w. Entries with w <= 0 or an undefined w
// are never eligible.

#ifndef CSKG_WALK_ENGINE_H_
#define CSKG_WALK_ENGINE_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <random>
#include <vector>

#include "cskg/kg_store.h"

namespace cskg {

class EmbeddingStore;

struct WalkConfig {
  double p = 2.0;               // return parameter
  double q = 1.5;               // in-out parameter
  std::size_t max_length = 10;  // concepts per walk
  std::size_t passes = 2;       // traversals over all start concepts
  std::uint64_t seed = 0;

  // Throws InvalidArgumentError unless p > 0, q > 0, max_length >= 2 and
  // passes >= 1.
  void validate() const;
};

// An edge taken by a walk. `forward` is true when the walk moved from the
// stored head to the stored tail.
struct WalkEdge {
  AssertionId assertion = 0;
  bool forward = true;

  friend bool operator==(const WalkEdge&, const WalkEdge&) = default;
};

struct Walk {
  std::size_t pass = 0;
  std::vector<ConceptId> concepts;
  // edges[i] connects concepts[i] and concepts[i + 1].
  std::vector<WalkEdge> edges;

  bool empty() const { return concepts.size() < 2; }

  friend bool operator==(const Walk&, const Walk&) = default;
};

struct TransitionEntry {
  Neighbor candidate;
  // Distance from the previous concept; absent on the first step.
  std::optional<HopDistance> hop;
  double alpha = 1.0;
  double weight = 0.0;        // w(v, x)
  double unnormalized = 0.0;  // pi(v, x)
  double probability = 0.0;   // pi(v, x) / Z
};

struct TransitionDistribution {
  std::vector<TransitionEntry> entries;
  double normalizer = 0.0;  // Z

  bool dead_end() const { return entries.empty(); }
};

// Search bias for a candidate at the given distance from the previous
// concept. kFar cannot occur for neighbors of the current concept and maps
// to 0.
double search_bias(HopDistance distance, double p, double q);

// Transition weight of an assertion: its stored sim_weight, else the cosine
// of its endpoints in `embeddings`.
std::optional<double> edge_weight(const ConceptGraph& graph,
                                  const EmbeddingStore& embeddings,
                                  const Assertion& assertion);

TransitionDistribution transition_distribution(
    const ConceptGraph& graph, const EmbeddingStore& embeddings,
    std::optional<ConceptId> previous, ConceptId current,
    const WalkConfig& config);

using WalkRng = std::mt19937_64;

// Generator seeded from a splitmix64 fold of `words`. Cheap enough to build
// once per walk or example.
WalkRng mixed_rng(std::initializer_list<std::uint64_t> words);

// Random stream for one walk, derived only from (seed, pass, start), so walk
// output does not depend on scheduling.
WalkRng make_walk_rng(std::uint64_t seed, std::size_t pass, ConceptId start);

// Uniform double in [0, 1) built from the top 53 bits of one draw.
double uniform01(WalkRng& rng);

// Index of an entry drawn from the distribution. Requires !dead_end().
std::size_t sample_entry(const TransitionDistribution& distribution,
                         WalkRng& rng);

// Walks from `start` until max_length concepts or a dead end. The returned
// walk may be empty (fewer than 2 concepts). When `trace` is given it
// receives the chosen TransitionEntry for every step. Throws
// InvalidArgumentError for an unknown start.
Walk sample_walk(const ConceptGraph& graph, const EmbeddingStore& embeddings,
                 ConceptId start, const WalkConfig& config, WalkRng& rng,
                 std::vector<TransitionEntry>* trace = nullptr);

struct GenerateOptions {
  std::size_t workers = 1;
  // Start concepts; all concepts in id order when unset.
  std::optional<std::vector<ConceptId>> starts;
};

// For each pass, one walk from every start concept; empty walks are
// dropped. Output is ordered by (pass, start order) for any worker count.
std::vector<Walk> generate_walks(const ConceptGraph& graph,
                                 const EmbeddingStore& embeddings,
                                 const WalkConfig& config,
                                 const GenerateOptions& options = {});

// {"pass", "start", "concepts": [...], "assertions": [{head, relation, tail,
// weight}, ...]}
nlohmann::json walk_to_json(const ConceptGraph& graph, const Walk& walk);

}  // namespace cskg

#endif  // CSKG_WALK_ENGINE_H_
