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

// TF-IDF keyword selection with stopword and part-of-speech filters.
//
//   score(w) = tf(w, utterance) * ln((1 + N) / (1 + df(w)))
//
// Only words with a noun, verb or adjective reading are kept. Readings come
// from a word list, with suffix rules for words it does not cover. When a
// graph is supplied, multi-word spans that name a graph concept are also
// candidates, scored with the mean idf of their non-stopword words.

#ifndef CSKG_KEYWORD_MINER_H_
#define CSKG_KEYWORD_MINER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace cskg {

class ConceptGraph;

struct CorpusStats {
  std::size_t document_count = 0;
  std::unordered_map<std::string, std::size_t> doc_frequency;

  std::size_t df(std::string_view token) const;
  double idf(std::string_view token) const;
};

// One document per utterance. Throws EmptyInputError for an empty corpus.
CorpusStats build_stats(std::span<const std::string> corpus);

namespace pos {
inline constexpr std::uint8_t kNoun = 1;
inline constexpr std::uint8_t kVerb = 2;
inline constexpr std::uint8_t kAdjective = 4;
inline constexpr std::uint8_t kAdverb = 8;
inline constexpr std::uint8_t kOther = 16;
inline constexpr std::uint8_t kContent = kNoun | kVerb | kAdjective;
}  // namespace pos

class PosLexicon {
 public:
  PosLexicon() = default;

  // `token<TAB>tags`, tags comma-separated from {n, v, adj, adv, other}.
  // Throws IngestionError on an unreadable file or an unknown tag.
  static PosLexicon load(const std::filesystem::path& path);

  void add(std::string token, std::uint8_t tags);

  // Lexicon readings, or suffix-rule readings for unlisted words.
  std::uint8_t tags(std::string_view token) const;
  bool listed(std::string_view token) const;
  bool content_word(std::string_view token) const {
    return (tags(token) & pos::kContent) != 0;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, std::uint8_t> entries_;
};

// Readings guessed from the word shape alone.
std::uint8_t suffix_tags(std::string_view token);

class StopwordList {
 public:
  StopwordList() = default;
  explicit StopwordList(std::unordered_set<std::string> words)
      : words_(std::move(words)) {}

  // One word per line; '#' starts a comment line.
  static StopwordList load(const std::filesystem::path& path);

  bool contains(std::string_view word) const {
    return words_.count(std::string(word)) != 0;
  }
  std::size_t size() const { return words_.size(); }

 private:
  std::unordered_set<std::string> words_;
};

struct Keyword {
  std::string text;
  double score = 0.0;
  bool in_graph = false;
};

struct KeywordSet {
  std::vector<Keyword> keywords;

  std::vector<std::string> texts() const;
};

struct KeywordOptions {
  std::size_t k = 5;
  // Longest multi-word span matched against graph concepts.
  std::size_t max_span = 3;
};

struct KeywordMiner {
  StopwordList stopwords;
  PosLexicon lexicon;
  KeywordOptions options;

  // Reads stopwords.txt and pos_lexicon.tsv from `data_dir`.
  static KeywordMiner load(const std::filesystem::path& data_dir);

  // Top-k candidates ordered by score, then graph membership, then text.
  KeywordSet extract(std::string_view utterance, const CorpusStats& stats,
                     const ConceptGraph* graph = nullptr) const;
};

}  // namespace cskg

#endif  // CSKG_KEYWORD_MINER_H_
