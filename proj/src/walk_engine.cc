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

#include "cskg/walk_engine.h"

#include <nlohmann/json.hpp>
#include <string>

#include "cskg/embedding_store.h"
#include "cskg/error.h"
#include "cskg/parallel.h"

namespace cskg {

void WalkConfig::validate() const {
  if (!(p > 0.0)) throw InvalidArgumentError("walk p must be > 0");
  if (!(q > 0.0)) throw InvalidArgumentError("walk q must be > 0");
  if (max_length < 2) throw InvalidArgumentError("walk length must be >= 2");
  if (passes < 1) throw InvalidArgumentError("walk passes must be >= 1");
}

double search_bias(HopDistance distance, double p, double q) {
  switch (distance) {
    case HopDistance::kSame:
      return 1.0 / p;
    case HopDistance::kAdjacent:
      return 1.0;
    case HopDistance::kTwoHops:
      return 1.0 / q;
    case HopDistance::kFar:
      break;
  }
  return 0.0;
}

std::optional<double> edge_weight(const ConceptGraph& graph,
                                  const EmbeddingStore& embeddings,
                                  const Assertion& assertion) {
  if (assertion.sim_weight) return assertion.sim_weight;
  return embeddings.cosine(graph.surface(assertion.head),
                           graph.surface(assertion.tail));
}

TransitionDistribution transition_distribution(
    const ConceptGraph& graph, const EmbeddingStore& embeddings,
    std::optional<ConceptId> previous, ConceptId current,
    const WalkConfig& config) {
  TransitionDistribution dist;
  for (const Neighbor& n : graph.neighbors(current)) {
    const auto w = edge_weight(graph, embeddings, graph.assertion(n.assertion));
    if (!w || *w <= 0.0) continue;
    TransitionEntry e;
    e.candidate = n;
    e.weight = *w;
    if (previous) {
      e.hop = hop_distance(graph, *previous, n.concept_id);
      e.alpha = search_bias(*e.hop, config.p, config.q);
    }
    e.unnormalized = e.alpha * e.weight;
    if (e.unnormalized <= 0.0) continue;
    dist.normalizer += e.unnormalized;
    dist.entries.push_back(e);
  }
  for (TransitionEntry& e : dist.entries) {
    e.probability = e.unnormalized / dist.normalizer;
  }
  return dist;
}

WalkRng mixed_rng(std::initializer_list<std::uint64_t> words) {
  // splitmix64 finalizer over the running state.
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (std::uint64_t w : words) {
    std::uint64_t z = state + w + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    state = z ^ (z >> 31);
  }
  return WalkRng(state);
}

WalkRng make_walk_rng(std::uint64_t seed, std::size_t pass, ConceptId start) {
  return mixed_rng({seed, pass, start});
}

double uniform01(WalkRng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t sample_entry(const TransitionDistribution& distribution,
                         WalkRng& rng) {
  const double target = uniform01(rng) * distribution.normalizer;
  double cumulative = 0.0;
  for (std::size_t i = 0; i < distribution.entries.size(); ++i) {
    cumulative += distribution.entries[i].unnormalized;
    if (target < cumulative) return i;
  }
  return distribution.entries.size() - 1;
}

Walk sample_walk(const ConceptGraph& graph, const EmbeddingStore& embeddings,
                 ConceptId start, const WalkConfig& config, WalkRng& rng,
                 std::vector<TransitionEntry>* trace) {
  if (start >= graph.concept_count()) {
    throw InvalidArgumentError("unknown start concept id " +
                               std::to_string(start));
  }
  Walk walk;
  walk.concepts.push_back(start);
  std::optional<ConceptId> previous;
  ConceptId current = start;
  while (walk.concepts.size() < config.max_length) {
    const auto dist =
        transition_distribution(graph, embeddings, previous, current, config);
    if (dist.dead_end()) break;
    const TransitionEntry& chosen = dist.entries[sample_entry(dist, rng)];
    if (trace != nullptr) trace->push_back(chosen);
    walk.edges.push_back(
        WalkEdge{chosen.candidate.assertion, chosen.candidate.forward});
    walk.concepts.push_back(chosen.candidate.concept_id);
    previous = current;
    current = chosen.candidate.concept_id;
  }
  return walk;
}

std::vector<Walk> generate_walks(const ConceptGraph& graph,
                                 const EmbeddingStore& embeddings,
                                 const WalkConfig& config,
                                 const GenerateOptions& options) {
  config.validate();
  std::vector<ConceptId> starts;
  if (options.starts) {
    starts = *options.starts;
  } else {
    starts.resize(graph.concept_count());
    for (std::size_t i = 0; i < starts.size(); ++i) {
      starts[i] = static_cast<ConceptId>(i);
    }
  }
  const std::size_t per_pass = starts.size();
  std::vector<Walk> slots(per_pass * config.passes);
  parallel_for(slots.size(), options.workers, [&](std::size_t i) {
    const std::size_t pass = i / per_pass + 1;
    const ConceptId start = starts[i % per_pass];
    WalkRng rng = make_walk_rng(config.seed, pass, start);
    slots[i] = sample_walk(graph, embeddings, start, config, rng);
    slots[i].pass = pass;
  });
  std::vector<Walk> walks;
  walks.reserve(slots.size());
  for (Walk& w : slots) {
    if (!w.empty()) walks.push_back(std::move(w));
  }
  return walks;
}

nlohmann::json walk_to_json(const ConceptGraph& graph, const Walk& walk) {
  nlohmann::json concepts = nlohmann::json::array();
  for (ConceptId c : walk.concepts) concepts.push_back(graph.surface(c));
  nlohmann::json assertions = nlohmann::json::array();
  for (const WalkEdge& e : walk.edges) {
    const Assertion& a = graph.assertion(e.assertion);
    assertions.push_back({{"head", graph.surface(a.head)},
                          {"relation", std::string(name_of(a.relation))},
                          {"tail", graph.surface(a.tail)},
                          {"weight", a.weight}});
  }
  return {{"pass", walk.pass},
          {"start", walk.concepts.empty() ? std::string()
                                          : graph.surface(walk.concepts[0])},
          {"concepts", std::move(concepts)},
          {"assertions", std::move(assertions)}};
}

}  // namespace cskg
