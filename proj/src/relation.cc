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

#include "cskg/relation.h"

#include <string>

#include "cskg/text.h"

namespace cskg {
namespace {

struct RelationEntry {
  std::string_view name;
  std::string_view phrase;
};

constexpr std::array<RelationEntry, kRelationCount> kTable = {{
    {"RelatedTo", "[related to]"},
    {"FormOf", "[form of]"},
    {"IsA", "[is a]"},
    {"PartOf", "[part of]"},
    {"HasA", "[has a]"},
    {"UsedFor", "[used for]"},
    {"CapableOf", "[capable of]"},
    {"AtLocation", "[typically located at]"},
    {"Causes", "[causes]"},
    {"HasSubevent", "[has subevent of]"},
    {"HasFirstSubevent", "[begins with]"},
    {"HasLastSubevent", "[concludes with]"},
    {"HasPrerequisite", "[has prerequisite]"},
    {"HasProperty", "[has property]"},
    {"MotivatedByGoal", "[motivated by goal]"},
    {"ObstructedBy", "[obstructed by]"},
    {"Desires", "[desires]"},
    {"CreatedBy", "[created by]"},
    {"Synonyms", "[synonym]"},
    {"Antonyms", "[antonym]"},
    {"DistinctFrom", "[distinct from]"},
    {"DerivedFrom", "[derived from]"},
    {"SymbolOf", "[symbolically represents]"},
    {"DefinedAs", "[defined as]"},
    {"MannerOf", "[manner of]"},
    {"LocatedNear", "[located near]"},
    {"HasContext", "[used in context of]"},
    {"SimilarTo", "[similar to]"},
    {"CausesDesire", "[makes someone want]"},
    {"MadeOf", "[made of]"},
    {"ReceivesAction", "[receives the action of]"},
}};

const RelationEntry& entry(Relation relation) {
  return kTable[static_cast<std::size_t>(relation)];
}

}  // namespace

const std::array<Relation, kRelationCount>& all_relations() {
  static const auto relations = [] {
    std::array<Relation, kRelationCount> out{};
    for (std::size_t i = 0; i < kRelationCount; ++i) {
      out[i] = static_cast<Relation>(i);
    }
    return out;
  }();
  return relations;
}

std::string_view name_of(Relation relation) { return entry(relation).name; }

std::string_view phrase_of(Relation relation) { return entry(relation).phrase; }

std::string_view phrase_body_of(Relation relation) {
  std::string_view phrase = entry(relation).phrase;
  return phrase.substr(1, phrase.size() - 2);
}

std::optional<Relation> relation_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kRelationCount; ++i) {
    if (kTable[i].name == name) return static_cast<Relation>(i);
  }
  return std::nullopt;
}

std::optional<Relation> relation_from_conceptnet(std::string_view uri_or_name) {
  std::string_view name = uri_or_name;
  if (name.starts_with("/r/")) name.remove_prefix(3);
  while (!name.empty() && name.back() == '/') name.remove_suffix(1);
  if (name == "Synonym") return Relation::kSynonyms;
  if (name == "Antonym") return Relation::kAntonyms;
  return relation_from_name(name);
}

std::optional<Relation> relation_from_phrase(std::string_view phrase) {
  for (std::size_t i = 0; i < kRelationCount; ++i) {
    if (kTable[i].phrase == phrase) return static_cast<Relation>(i);
  }
  return std::nullopt;
}

std::optional<Relation> relation_from_phrase_body(std::string_view body) {
  const std::string normalized = collapse_whitespace(to_lower(body));
  for (Relation relation : all_relations()) {
    if (phrase_body_of(relation) == normalized) return relation;
  }
  return std::nullopt;
}

}  // namespace cskg
