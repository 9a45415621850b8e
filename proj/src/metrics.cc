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

#include "cskg/metrics.h"

#include <cstdio>
#include <nlohmann/json.hpp>

namespace cskg {
namespace {

std::string percent(std::optional<double> value) {
  if (!value) return "undefined";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f%%", *value * 100.0);
  return buf;
}

}  // namespace

std::optional<double> AccuracyReport::concepts_acc() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(pair_hits) / static_cast<double>(total);
}

std::optional<double> AccuracyReport::assertion_acc() const {
  if (total == 0) return std::nullopt;
  return static_cast<double>(assertion_hits) / static_cast<double>(total);
}

AccuracyReport& AccuracyReport::operator+=(const AccuracyReport& other) {
  total += other.total;
  pair_hits += other.pair_hits;
  assertion_hits += other.assertion_hits;
  unparsed += other.unparsed;
  generations += other.generations;
  return *this;
}

nlohmann::json AccuracyReport::to_json() const {
  nlohmann::json j = {
      {"generations", generations}, {"total", total},
      {"pair_hits", pair_hits},     {"assertion_hits", assertion_hits},
      {"unparsed", unparsed},       {"either_direction", either_direction},
      {"graph", graph_label},       {"accuracy_defined", total > 0},
  };
  j["concepts_acc"] = concepts_acc() ? nlohmann::json(*concepts_acc())
                                     : nlohmann::json(nullptr);
  j["assertion_acc"] = assertion_acc() ? nlohmann::json(*assertion_acc())
                                       : nlohmann::json(nullptr);
  return j;
}

std::string AccuracyReport::to_text() const {
  std::string out;
  out += "generations:        " + std::to_string(generations) + "\n";
  out += "parsed triplets:    " + std::to_string(total) + "\n";
  out += "unparsed segments:  " + std::to_string(unparsed) + "\n";
  out += "concepts accuracy:  " + percent(concepts_acc()) + " (" +
         std::to_string(pair_hits) + "/" + std::to_string(total) + ")\n";
  out += "assertion accuracy: " + percent(assertion_acc()) + " (" +
         std::to_string(assertion_hits) + "/" + std::to_string(total) + ")\n";
  return out;
}

AccuracyReport score(const ParsedOutput& parsed, const ConceptGraph& graph,
                     const ScoreOptions& options) {
  AccuracyReport report;
  report.generations = 1;
  report.either_direction = options.either_direction;
  report.graph_label = options.graph_label;
  report.unparsed = parsed.errors.size();
  for (const TripletChain& chain : parsed.chains) {
    for (const Triplet& t : chain.triplets) {
      ++report.total;
      const MatchReport m =
          lookup(graph, t.head, t.tail, t.relation, options.either_direction);
      if (m.pair_exists) ++report.pair_hits;
      if (m.assertion_exists) ++report.assertion_hits;
    }
  }
  return report;
}

AccuracyReport score(std::span<const ParsedOutput> parsed,
                     const ConceptGraph& graph, const ScoreOptions& options) {
  AccuracyReport report;
  report.either_direction = options.either_direction;
  report.graph_label = options.graph_label;
  for (const ParsedOutput& p : parsed) report += score(p, graph, options);
  return report;
}

}  // namespace cskg
