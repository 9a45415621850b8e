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

#include "cskg/corpus_forge.h"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <unordered_set>
#include <utility>

#include "cskg/digest.h"
#include "cskg/error.h"

namespace cskg {
namespace {

std::uint64_t rank_key(std::uint64_t seed, const std::string& id) {
  return prefix64(sha256(std::to_string(seed) + ":" + id));
}

void sort_by_id(std::vector<PromptedExample>* examples) {
  std::sort(examples->begin(), examples->end(),
            [](const PromptedExample& a, const PromptedExample& b) {
              return a.id < b.id;
            });
}

}  // namespace

std::string_view split_name(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kValid:
      return "valid";
    case Split::kTest:
      return "test";
  }
  return "train";
}

std::optional<Split> split_from_name(std::string_view name) {
  if (name == "train") return Split::kTrain;
  if (name == "valid") return Split::kValid;
  if (name == "test") return Split::kTest;
  return std::nullopt;
}

TripletChain serialize_walk(const ConceptGraph& graph, const Walk& walk) {
  if (walk.empty() || walk.edges.size() + 1 != walk.concepts.size()) {
    throw InvalidArgumentError("walk needs at least two concepts");
  }
  TripletChain chain;
  chain.triplets.reserve(walk.edges.size());
  for (const WalkEdge& e : walk.edges) {
    const Assertion& a = graph.assertion(e.assertion);
    chain.triplets.push_back(
        Triplet{graph.surface(a.head), a.relation, graph.surface(a.tail)});
  }
  return chain;
}

std::vector<int> eligible_templates(const TripletChain& chain) {
  if (chain.triplets.empty()) return {};
  if (chain.triplets.size() == 1) return {1, 2};
  return {1, 2, 3, 4};
}

std::string render_prompt(const TripletChain& chain, int template_id) {
  const auto eligible = eligible_templates(chain);
  if (std::find(eligible.begin(), eligible.end(), template_id) ==
      eligible.end()) {
    throw InvalidArgumentError("template " + std::to_string(template_id) +
                               " not eligible for chain");
  }
  const auto& t = chain.triplets;
  std::string out(kCommonsenseToken);
  out.push_back(' ');
  switch (template_id) {
    case 1:
      out += t[0].head + " " + std::string(phrase_of(t[0].relation));
      break;
    case 2:
      out += to_string(t[0]) + ",";
      break;
    case 3:
      out += to_string(t[0]) + ", " + t[1].head + " " +
             std::string(phrase_of(t[1].relation));
      break;
    case 4:
      out += to_string(t[0]) + ", " + to_string(t[1]) + ",";
      break;
  }
  return out;
}

std::string example_id(const TripletChain& chain) {
  return to_hex(sha256(to_string(chain))).substr(0, 16);
}

WalkRng example_rng(std::uint64_t seed, std::string_view id) {
  return mixed_rng({seed, prefix64(sha256(id))});
}

PromptedExample apply_templates(const TripletChain& chain, WalkRng& rng) {
  const auto eligible = eligible_templates(chain);
  if (eligible.empty()) throw InvalidArgumentError("empty triplet chain");
  auto pick = static_cast<std::size_t>(uniform01(rng) *
                                       static_cast<double>(eligible.size()));
  pick = std::min(pick, eligible.size() - 1);
  PromptedExample ex;
  ex.id = example_id(chain);
  ex.template_id = eligible[pick];
  ex.prompt = render_prompt(chain, ex.template_id);
  ex.target = to_string(chain);
  ex.chain = chain;
  return ex;
}

std::array<std::size_t, 3> split_sizes(std::size_t n,
                                       const SplitRatios& ratios) {
  const auto nd = static_cast<double>(n);
  std::size_t train = std::min<std::size_t>(
      n, static_cast<std::size_t>(std::llround(nd * ratios.train)));
  std::size_t valid = std::min<std::size_t>(
      n - train, static_cast<std::size_t>(std::llround(nd * ratios.valid)));
  return {train, valid, n - train - valid};
}

CorpusSplit build_corpus(std::span<const TripletChain> chains,
                         std::uint64_t split_seed, const SplitRatios& ratios) {
  if (chains.empty()) throw EmptyInputError("no walks to build a corpus from");
  CorpusSplit corpus;
  std::vector<PromptedExample> examples;
  std::unordered_set<std::string> seen;
  for (const TripletChain& chain : chains) {
    const std::string id = example_id(chain);
    if (!seen.insert(id).second) {
      ++corpus.duplicates;
      continue;
    }
    WalkRng rng = example_rng(split_seed, id);
    examples.push_back(apply_templates(chain, rng));
  }

  std::vector<std::pair<std::uint64_t, std::size_t>> order;
  order.reserve(examples.size());
  for (std::size_t i = 0; i < examples.size(); ++i) {
    order.emplace_back(rank_key(split_seed, examples[i].id), i);
  }
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return examples[a.second].id < examples[b.second].id;
  });
  const auto sizes = split_sizes(examples.size(), ratios);
  for (std::size_t r = 0; r < order.size(); ++r) {
    PromptedExample& ex = examples[order[r].second];
    if (r < sizes[0]) {
      ex.split = Split::kTrain;
      corpus.train.push_back(std::move(ex));
    } else if (r < sizes[0] + sizes[1]) {
      ex.split = Split::kValid;
      corpus.valid.push_back(std::move(ex));
    } else {
      ex.split = Split::kTest;
      corpus.test.push_back(std::move(ex));
    }
  }
  sort_by_id(&corpus.train);
  sort_by_id(&corpus.valid);
  sort_by_id(&corpus.test);
  return corpus;
}

CorpusSplit build_corpus(const ConceptGraph& graph, std::span<const Walk> walks,
                         std::uint64_t split_seed, const SplitRatios& ratios) {
  std::vector<TripletChain> chains;
  chains.reserve(walks.size());
  for (const Walk& w : walks) {
    if (!w.empty()) chains.push_back(serialize_walk(graph, w));
  }
  return build_corpus(chains, split_seed, ratios);
}

CorpusSplit resample_prompts(const CorpusSplit& corpus,
                             std::uint64_t epoch_seed) {
  CorpusSplit out = corpus;
  for (PromptedExample& ex : out.train) {
    WalkRng rng = example_rng(epoch_seed, ex.id);
    PromptedExample fresh = apply_templates(ex.chain, rng);
    ex.template_id = fresh.template_id;
    ex.prompt = std::move(fresh.prompt);
  }
  return out;
}

nlohmann::json example_to_json(const PromptedExample& example) {
  return {{"id", example.id},
          {"prompt", example.prompt},
          {"target", example.target},
          {"template_id", example.template_id},
          {"split", std::string(split_name(example.split))}};
}

PromptedExample example_from_json(const nlohmann::json& record) {
  try {
    PromptedExample ex;
    ex.id = record.at("id").get<std::string>();
    ex.prompt = record.at("prompt").get<std::string>();
    ex.target = record.at("target").get<std::string>();
    ex.template_id = record.at("template_id").get<int>();
    const auto split = split_from_name(record.at("split").get<std::string>());
    if (!split) throw InvalidArgumentError("unknown split name");
    ex.split = *split;
    ParsedOutput parsed = parse_chains(ex.target);
    if (parsed.chains.size() != 1 || !parsed.errors.empty()) {
      throw InvalidArgumentError("target is not a single triplet chain");
    }
    ex.chain = std::move(parsed.chains.front());
    return ex;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("bad corpus record: ") + e.what());
  }
}

}  // namespace cskg
