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

// String helpers shared by the loaders, the chain codec and the keyword
// miner. ASCII-only case folding; multibyte UTF-8 passes through unchanged.

#ifndef CSKG_TEXT_H_
#define CSKG_TEXT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cskg {

std::string to_lower(std::string_view s);

std::string_view trim(std::string_view s);

// Trims and replaces every run of whitespace with a single space.
std::string collapse_whitespace(std::string_view s);

std::vector<std::string_view> split(std::string_view s, char delimiter);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Decodes %XX escapes. Malformed escapes are copied verbatim.
std::string percent_decode(std::string_view s);

// Canonical concept surface: lowercase, underscores become spaces, single
// spaces between words. Returns nullopt for labels that are empty or carry a
// character reserved by the chain syntax ('[', ']', ',', ';').
std::optional<std::string> normalize_concept(std::string_view label);

// Lowercased word tokens. A token is a maximal run of letters, digits and
// apostrophes with leading/trailing apostrophes removed; everything else is
// a separator. Non-ASCII bytes count as letters, except that U+2019 is read
// as an apostrophe.
std::vector<std::string> tokenize_words(std::string_view text);

}  // namespace cskg

#endif  // CSKG_TEXT_H_
