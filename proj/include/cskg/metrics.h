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

#ifndef CSKG_METRICS_H_
#define CSKG_METRICS_H_

#include <cstddef>
#include <nlohmann/json_fwd.hpp>
#include <optional>
#include <span>
#include <string>

#include "cskg/kg_store.h"
#include "cskg/triplet_codec.h"

namespace cskg {

struct ScoreOptions {
  // Accept an assertion stored as (tail, relation, head).
  bool either_direction = false;
  // Free-form description of the graph scored against, copied into reports.
  std::string graph_label;
};

// Concepts accuracy counts generated (head, tail) pairs linked by any
// assertion; assertion accuracy counts exact (head, relation, tail) matches.
// Both are over parsed triplets; unparsed segments are reported separately.
struct AccuracyReport {
  std::size_t total = 0;
  std::size_t pair_hits = 0;
  std::size_t assertion_hits = 0;
  std::size_t unparsed = 0;
  std::size_t generations = 0;
  bool either_direction = false;
  std::string graph_label;

  // nullopt when total == 0.
  std::optional<double> concepts_acc() const;
  std::optional<double> assertion_acc() const;

  AccuracyReport& operator+=(const AccuracyReport& other);

  nlohmann::json to_json() const;
  // Human-readable summary with percentages to two decimals.
  std::string to_text() const;
};

AccuracyReport score(const ParsedOutput& parsed, const ConceptGraph& graph,
                     const ScoreOptions& options = {});

AccuracyReport score(std::span<const ParsedOutput> parsed,
                     const ConceptGraph& graph,
                     const ScoreOptions& options = {});

}  // namespace cskg

#endif  // CSKG_METRICS_H_
