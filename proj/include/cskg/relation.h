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

#ifndef CSKG_RELATION_H_
#define CSKG_RELATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cskg {

// The canonical ConceptNet relations that have a natural-language phrase.
// Enumerator order is the order of the phrase table.
enum class Relation : std::uint8_t {
  kRelatedTo,
  kFormOf,
  kIsA,
  kPartOf,
  kHasA,
  kUsedFor,
  kCapableOf,
  kAtLocation,
  kCauses,
  kHasSubevent,
  kHasFirstSubevent,
  kHasLastSubevent,
  kHasPrerequisite,
  kHasProperty,
  kMotivatedByGoal,
  kObstructedBy,
  kDesires,
  kCreatedBy,
  kSynonyms,
  kAntonyms,
  kDistinctFrom,
  kDerivedFrom,
  kSymbolOf,
  kDefinedAs,
  kMannerOf,
  kLocatedNear,
  kHasContext,
  kSimilarTo,
  kCausesDesire,
  kMadeOf,
  kReceivesAction,
};

inline constexpr std::size_t kRelationCount = 31;

// All relations in table order.
const std::array<Relation, kRelationCount>& all_relations();

// Canonical identifier, e.g. "AtLocation".
std::string_view name_of(Relation relation);

// Bracketed phrase, e.g. "[typically located at]".
std::string_view phrase_of(Relation relation);

// Phrase without the brackets, e.g. "typically located at".
std::string_view phrase_body_of(Relation relation);

// Exact match on the canonical identifier.
std::optional<Relation> relation_from_name(std::string_view name);

// Like relation_from_name but also accepts ConceptNet URI spellings
// ("/r/Synonym", "Antonym").
std::optional<Relation> relation_from_conceptnet(std::string_view uri_or_name);

// Exact match on the bracketed phrase.
std::optional<Relation> relation_from_phrase(std::string_view phrase);

// Match on the phrase body. Case and inner whitespace runs are ignored.
std::optional<Relation> relation_from_phrase_body(std::string_view body);

}  // namespace cskg

#endif  // CSKG_RELATION_H_
