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

// Turns walks into prompted training examples.
//
// A walk becomes a triplet chain in stored assertion orientation. Each chain
// gets one of four prompts, all of which are prefixes of the chain text:
//
//   1  <|commonsense|> h1 [r1]
//   2  <|commonsense|> h1 [r1] t1,
//   3  <|commonsense|> h1 [r1] t1, h2 [r2]
//   4  <|commonsense|> h1 [r1] t1, h2 [r2] t2,
//
// Templates 3 and 4 need a second triplet. Examples are keyed by a digest of
// the chain text, and the train/valid/test partition is a ranking on
// digest(seed, id), so membership does not depend on input order.

#ifndef CSKG_CORPUS_FORGE_H_
#define CSKG_CORPUS_FORGE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cskg/kg_store.h"
#include "cskg/triplet_codec.h"
#include "cskg/walk_engine.h"

namespace cskg {

enum class Split { kTrain, kValid, kTest };

std::string_view split_name(Split split);
std::optional<Split> split_from_name(std::string_view name);

struct PromptedExample {
  std::string id;
  std::string prompt;
  std::string target;
  int template_id = 1;
  Split split = Split::kTrain;
  TripletChain chain;

  friend bool operator==(const PromptedExample&,
                         const PromptedExample&) = default;
};

struct SplitRatios {
  double train = 0.8;
  double valid = 0.1;
  double test = 0.1;
};

struct CorpusSplit {
  std::vector<PromptedExample> train;
  std::vector<PromptedExample> valid;
  std::vector<PromptedExample> test;
  // Inputs whose chain text repeated an earlier one.
  std::size_t duplicates = 0;

  std::size_t size() const { return train.size() + valid.size() + test.size(); }

  friend bool operator==(const CorpusSplit&, const CorpusSplit&) = default;
};

// Chain of the walk's assertions in stored orientation. Throws
// InvalidArgumentError for walks with fewer than two concepts.
TripletChain serialize_walk(const ConceptGraph& graph, const Walk& walk);

// Template ids usable for a chain: {1, 2} for one triplet, {1, 2, 3, 4}
// otherwise.
std::vector<int> eligible_templates(const TripletChain& chain);

// Renders one template. Throws InvalidArgumentError when the template is not
// eligible for the chain.
std::string render_prompt(const TripletChain& chain, int template_id);

// Stable example id: hex of the first 8 SHA-256 bytes of the chain text.
std::string example_id(const TripletChain& chain);

// Picks a template uniformly among the eligible ones.
PromptedExample apply_templates(const TripletChain& chain, WalkRng& rng);

// Template stream for one example, derived from (seed, id).
WalkRng example_rng(std::uint64_t seed, std::string_view id);

// (train, valid, test) sizes: round(n * train), round(n * valid), rest.
std::array<std::size_t, 3> split_sizes(std::size_t n,
                                       const SplitRatios& ratios = {});

// Throws EmptyInputError for an empty input. Within each split, examples are
// ordered by id.
CorpusSplit build_corpus(std::span<const TripletChain> chains,
                         std::uint64_t split_seed,
                         const SplitRatios& ratios = {});

CorpusSplit build_corpus(const ConceptGraph& graph, std::span<const Walk> walks,
                         std::uint64_t split_seed,
                         const SplitRatios& ratios = {});

// Draws fresh training prompts from (epoch_seed, id). Valid and test
// examples, and every split membership, are left unchanged.
CorpusSplit resample_prompts(const CorpusSplit& corpus,
                             std::uint64_t epoch_seed);

// {"id", "prompt", "target", "template_id", "split"}
nlohmann::json example_to_json(const PromptedExample& example);

// Inverse of example_to_json; the chain is parsed back from the target.
// Throws InvalidArgumentError on a malformed record.
PromptedExample example_from_json(const nlohmann::json& record);

}  // namespace cskg

#endif  // CSKG_CORPUS_FORGE_H_
