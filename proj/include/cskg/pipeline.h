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

// End-to-end commands. Each one validates the config, reads its inputs,
// writes its outputs plus manifest.json into config.out, prints a short
// summary and returns the manifest. Fatal problems are thrown as cskg::Error.

#ifndef CSKG_PIPELINE_H_
#define CSKG_PIPELINE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <string>

#include "cskg/embedding_store.h"
#include "cskg/kg_store.h"
#include "cskg/run_config.h"

namespace cskg {

struct LoadedGraph {
  ConceptGraph graph;  // filtered, sim_weight set on every assertion
  EmbeddingStore embeddings;
  bool from_snapshot = false;
  std::filesystem::path snapshot;  // empty when caching is off
  nlohmann::json summary;          // load and filter reports
};

// Key of the filtered-graph snapshot: digest of the dump and embedding file
// contents plus every parameter that changes the filtered graph.
std::string snapshot_key(const RunConfig& config);

// Loads embeddings and the filtered graph, reusing a snapshot from
// config.cache_dir when one with the same key exists and writing one
// otherwise.
LoadedGraph load_filtered_graph(const RunConfig& config);

// Concepts with at least one neighbor reachable with positive weight, i.e.
// the start concepts whose walks are non-empty.
std::size_t eligible_start_count(const ConceptGraph& graph,
                                 const EmbeddingStore& embeddings);

nlohmann::json run_load(const RunConfig& config, std::ostream& log);
nlohmann::json run_walk(const RunConfig& config, std::ostream& log);
nlohmann::json run_resample(const RunConfig& config, std::ostream& log);
nlohmann::json run_extract_commongen(const RunConfig& config,
                                     std::ostream& log);
nlohmann::json run_extract_dialogues(const RunConfig& config,
                                     std::ostream& log);
nlohmann::json run_eval_triplets(const RunConfig& config, std::ostream& log);

}  // namespace cskg

#endif  // CSKG_PIPELINE_H_
