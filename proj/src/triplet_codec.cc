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

#include "cskg/triplet_codec.h"

#include <algorithm>
#include <optional>

#include "cskg/text.h"

namespace cskg {
namespace {

std::optional<Triplet> parse_triplet(std::string_view segment,
                                     std::string* reason) {
  const auto opens = std::count(segment.begin(), segment.end(), '[');
  const auto closes = std::count(segment.begin(), segment.end(), ']');
  const std::size_t open = segment.find('[');
  const std::size_t close = segment.find(']');
  if (opens != 1 || closes != 1 || close < open) {
    *reason = "expected exactly one [relation] span";
    return std::nullopt;
  }
  const auto relation =
      relation_from_phrase_body(segment.substr(open + 1, close - open - 1));
  if (!relation) {
    *reason = "unknown relation phrase";
    return std::nullopt;
  }
  auto head = normalize_concept(segment.substr(0, open));
  if (!head) {
    *reason = "empty head concept";
    return std::nullopt;
  }
  auto tail = normalize_concept(segment.substr(close + 1));
  if (!tail) {
    *reason = "empty tail concept";
    return std::nullopt;
  }
  return Triplet{std::move(*head), *relation, std::move(*tail)};
}

}  // namespace

std::string to_string(const Triplet& triplet) {
  std::string out = triplet.head;
  out.push_back(' ');
  out.append(phrase_of(triplet.relation));
  out.push_back(' ');
  out.append(triplet.tail);
  return out;
}

std::string to_string(const TripletChain& chain) {
  std::string out;
  for (std::size_t i = 0; i < chain.triplets.size(); ++i) {
    if (i > 0) out.append(", ");
    out.append(to_string(chain.triplets[i]));
  }
  return out;
}

std::string join_chains(std::span<const TripletChain> chains) {
  std::string out;
  for (std::size_t i = 0; i < chains.size(); ++i) {
    if (i > 0) out.append("; ");
    out.append(to_string(chains[i]));
  }
  return out;
}

std::string terminate_chains(std::span<const TripletChain> chains) {
  if (chains.empty()) return {};
  return join_chains(chains) + ";";
}

std::size_t ParsedOutput::triplet_count() const {
  std::size_t n = 0;
  for (const auto& c : chains) n += c.triplets.size();
  return n;
}

ParsedOutput parse_chains(std::string_view text) {
  ParsedOutput out;
  text = trim(text);
  if (text.starts_with(kCommonsenseToken)) {
    text.remove_prefix(kCommonsenseToken.size());
    text = trim(text);
    if (text.starts_with(':')) text.remove_prefix(1);
  }
  for (std::string_view chain_text : split(text, ';')) {
    if (trim(chain_text).empty()) continue;
    TripletChain chain;
    for (std::string_view segment : split(chain_text, ',')) {
      segment = trim(segment);
      if (segment.empty()) continue;
      std::string reason;
      if (auto triplet = parse_triplet(segment, &reason)) {
        chain.triplets.push_back(std::move(*triplet));
      } else {
        out.errors.push_back(ParseError{std::string(segment), reason});
      }
    }
    if (!chain.triplets.empty()) out.chains.push_back(std::move(chain));
  }
  return out;
}

}  // namespace cskg
