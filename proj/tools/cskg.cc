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

// cskg: commonsense corpus pipeline.
//
//   cskg [options] <load|walk|resample|extract-commongen|extract-dialogues|
//                   eval-triplets>
//
// Every option can also be set from the --config file (TOML or INI, keys are
// the long option names) and options given after the subcommand are
// accepted.

#include <cstdlib>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cskg/error.h"
#include "cskg/pipeline.h"
#include "cskg/run_config.h"

#ifndef CSKG_DEFAULT_DATA_DIR
#define CSKG_DEFAULT_DATA_DIR "data"
#endif

namespace {

std::filesystem::path default_cache_dir() {
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return std::filesystem::path(xdg) / "cskg";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "cskg";
  }
  return ".cskg-cache";
}

}  // namespace

int main(int argc, char** argv) {
  cskg::RunConfig config;
  config.data_dir = CSKG_DEFAULT_DATA_DIR;
  config.cache_dir = default_cache_dir();

  CLI::App app{"Commonsense knowledge graph corpus pipeline"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults");
  app.option_defaults()->always_capture_default();

  std::string graph, embeddings, commongen, dialogues, generations, corpus;
  std::string out = config.out.string();
  std::string data_dir = config.data_dir.string();
  std::string cache_dir = config.cache_dir.string();
  bool no_cache = false;
  std::size_t vocab_limit = 0;
  std::uint64_t seed = config.walk.seed;
  std::uint64_t split_seed = 0;

  auto* inputs = "Inputs";
  app.add_option("--graph", graph, "Assertion dump (ConceptNet CSV or TSV)")
      ->group(inputs);
  app.add_option("--embeddings", embeddings, "Word vectors, text format")
      ->group(inputs);
  app.add_option("--commongen", commongen, "CommonGen-style JSON-Lines")
      ->group(inputs);
  app.add_option("--dialogues", dialogues, "Dialogue JSON")->group(inputs);
  app.add_option("--generations", generations,
                 "Generated commonsense, one per line")
      ->group(inputs);
  app.add_option("--corpus", corpus, "Existing corpus directory (resample)")
      ->group(inputs);
  app.add_option("--data-dir", data_dir,
                 "Directory with stopwords.txt and pos_lexicon.tsv")
      ->envname("CSKG_DATA_DIR")
      ->group(inputs);

  auto* output = "Output";
  app.add_option("--out", out, "Output directory")->group(output);
  app.add_option("--cache-dir", cache_dir, "Filtered-graph snapshot cache")
      ->group(output);
  app.add_flag("--no-cache", no_cache, "Do not read or write snapshots")
      ->group(output);

  auto* loading = "Loading";
  app.add_option("--lang", config.lang,
                 "Language of ConceptNet rows to keep; empty keeps all")
      ->group(loading);
  app.add_option("--vocab-limit", vocab_limit,
                 "Read at most this many vectors (0 = all)")
      ->group(loading);
  app.add_option("--min-weight", config.filter.min_weight,
                 "Drop assertions below this weight")
      ->group(loading);
  app.add_option("--min-sim", config.filter.min_sim,
                 "Drop assertions whose endpoint cosine is below this")
      ->group(loading);

  auto* walking = "Walks and corpus";
  app.add_option("-p,--return-param", config.walk.p, "Return parameter p")
      ->check(CLI::PositiveNumber)
      ->group(walking);
  app.add_option("-q,--inout-param", config.walk.q, "In-out parameter q")
      ->check(CLI::PositiveNumber)
      ->group(walking);
  app.add_option("-l,--length", config.walk.max_length,
                 "Maximum concepts per walk")
      ->group(walking);
  app.add_option("--passes", config.walk.passes,
                 "Walks started from every concept")
      ->group(walking);
  app.add_option("--seed", seed, "Walk seed")->group(walking);
  auto* split_seed_opt =
      app.add_option("--split-seed", split_seed,
                     "Seed of the train/valid/test partition (default: --seed)")
          ->group(walking);
  app.add_option("--epoch-seed", config.epoch_seed,
                 "Seed for resampled training prompts")
      ->group(walking);
  app.add_option("--train-ratio", config.ratios.train, "Share of examples")
      ->group(walking);
  app.add_option("--valid-ratio", config.ratios.valid, "Share of examples")
      ->group(walking);
  app.add_option("--test-ratio", config.ratios.test, "Share of examples")
      ->group(walking);
  app.add_flag("--emit-walks", config.emit_walks, "Also write walks.jsonl")
      ->group(walking);

  auto* extraction = "Extraction";
  app.add_option("--pair-gate", config.thresholds.pair_gate,
                 "Minimum cosine between a concept pair for two-hop search")
      ->group(extraction);
  app.add_option("--middle-gate", config.thresholds.middle_gate,
                 "Cosine a middle concept must exceed with either endpoint")
      ->group(extraction);
  app.add_option("-k,--keywords", config.keywords_k,
                 "Keywords kept per utterance")
      ->group(extraction);
  app.add_option("--max-context-turns", config.max_context_turns,
                 "Context turns per dialogue record")
      ->group(extraction);

  auto* evaluation = "Evaluation";
  app.add_flag("--either-direction", config.either_direction,
               "Accept assertions stored in the reverse direction")
      ->group(evaluation);
  app.add_flag("--unfiltered", config.score_unfiltered,
               "Score against the unfiltered graph")
      ->group(evaluation);

  app.add_option("-j,--workers", config.workers, "Worker threads")
      ->check(CLI::PositiveNumber);

  using Runner =
      std::function<nlohmann::json(const cskg::RunConfig&, std::ostream&)>;
  const std::map<std::string, std::pair<std::string, Runner>> commands = {
      {"load", {"Load and filter the graph, write a snapshot", cskg::run_load}},
      {"walk", {"Generate walks and the prompted corpus", cskg::run_walk}},
      {"resample",
       {"Redraw training prompts of an existing corpus", cskg::run_resample}},
      {"extract-commongen",
       {"Build two-way records from concept sets",
        cskg::run_extract_commongen}},
      {"extract-dialogues",
       {"Build commonsense-annotated dialogue records",
        cskg::run_extract_dialogues}},
      {"eval-triplets",
       {"Parse and score generated commonsense", cskg::run_eval_triplets}},
  };
  std::map<const CLI::App*, const Runner*> runners;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->fallthrough();
    runners[sub] = &entry.second;
  }

  CLI11_PARSE(app, argc, argv);

  config.graph = graph;
  config.embeddings = embeddings;
  config.commongen = commongen;
  config.dialogues = dialogues;
  config.generations = generations;
  config.corpus = corpus;
  config.out = out;
  config.data_dir = data_dir;
  config.cache_dir =
      no_cache ? std::filesystem::path() : std::filesystem::path(cache_dir);
  if (vocab_limit > 0) config.vocab_limit = vocab_limit;
  config.walk.seed = seed;
  config.split_seed = split_seed_opt->count() > 0 ? split_seed : seed;

  const CLI::App* chosen = app.get_subcommands().front();
  try {
    (*runners.at(chosen))(config, std::cout);
  } catch (const cskg::Error& e) {
    std::cerr << "cskg " << chosen->get_name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cskg " << chosen->get_name()
              << ": unexpected error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
