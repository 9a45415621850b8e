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

// Surface syntax for triplet chains:
//
//   text    := [ "<|commonsense|>" [":"] ] chain { ";" chain } [ ";" ]
//   chain   := triplet { "," triplet }
//   triplet := head "[" phrase-body "]" tail
//
// Serialization writes `head [phrase] tail`, triplets joined with ", " and
// chains joined with "; ".

#ifndef CSKG_TRIPLET_CODEC_H_
#define CSKG_TRIPLET_CODEC_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cskg/relation.h"

namespace cskg {

inline constexpr std::string_view kCommonsenseToken = "<|commonsense|>";

struct Triplet {
  std::string head;
  Relation relation = Relation::kRelatedTo;
  std::string tail;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct TripletChain {
  std::vector<Triplet> triplets;

  friend bool operator==(const TripletChain&, const TripletChain&) = default;
};

std::string to_string(const Triplet& triplet);
std::string to_string(const TripletChain& chain);

// Chains separated by "; ", without a terminator.
std::string join_chains(std::span<const TripletChain> chains);

// join_chains followed by ";"; empty for no chains.
std::string terminate_chains(std::span<const TripletChain> chains);

struct ParseError {
  std::string segment;
  std::string reason;
};

struct ParsedOutput {
  std::vector<TripletChain> chains;
  std::vector<ParseError> errors;

  std::size_t triplet_count() const;
};

// Never fails: malformed triplet segments are recorded in `errors` and the
// rest of the text is parsed. Concepts are normalized like graph labels.
ParsedOutput parse_chains(std::string_view text);

}  // namespace cskg

#endif  // CSKG_TRIPLET_CODEC_H_
