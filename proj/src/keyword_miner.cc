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

#include "cskg/keyword_miner.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>

#include "cskg/error.h"
#include "cskg/kg_store.h"
#include "cskg/text.h"

namespace cskg {
namespace {

bool all_digits(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

bool ends_with_any(std::string_view token,
                   std::initializer_list<std::string_view> suffixes,
                   std::size_t min_stem = 3) {
  for (std::string_view s : suffixes) {
    if (token.size() >= s.size() + min_stem && token.ends_with(s)) return true;
  }
  return false;
}

std::uint8_t parse_tag(std::string_view tag) {
  if (tag == "n") return pos::kNoun;
  if (tag == "v") return pos::kVerb;
  if (tag == "adj") return pos::kAdjective;
  if (tag == "adv") return pos::kAdverb;
  if (tag == "other") return pos::kOther;
  return 0;
}

}  // namespace

std::size_t CorpusStats::df(std::string_view token) const {
  const auto it = doc_frequency.find(std::string(token));
  return it == doc_frequency.end() ? 0 : it->second;
}

double CorpusStats::idf(std::string_view token) const {
  return std::log((1.0 + static_cast<double>(document_count)) /
                  (1.0 + static_cast<double>(df(token))));
}

CorpusStats build_stats(std::span<const std::string> corpus) {
  if (corpus.empty()) throw EmptyInputError("keyword corpus is empty");
  CorpusStats stats;
  stats.document_count = corpus.size();
  std::unordered_set<std::string> seen;
  for (const std::string& doc : corpus) {
    seen.clear();
    for (std::string& token : tokenize_words(doc)) {
      if (seen.insert(token).second) ++stats.doc_frequency[std::move(token)];
    }
  }
  return stats;
}

std::uint8_t suffix_tags(std::string_view token) {
  if (token.empty() || all_digits(token)) return pos::kOther;
  if (ends_with_any(token, {"ly"})) return pos::kAdverb;
  if (ends_with_any(token, {"ing", "ed"}, 2)) return pos::kVerb;
  if (ends_with_any(token, {"ful", "ous", "ive", "able", "ible", "less", "ish",
                            "ical", "ic", "al"})) {
    return pos::kAdjective;
  }
  // Open-class default.
  return pos::kNoun;
}

PosLexicon PosLexicon::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open POS lexicon " + path.string());
  PosLexicon lexicon;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 2) {
      throw IngestionError(path.string() + ":" + std::to_string(line_no) +
                           ": expected token<TAB>tags");
    }
    std::uint8_t tags = 0;
    for (std::string_view tag : split(trim(fields[1]), ',')) {
      const std::uint8_t t = parse_tag(trim(tag));
      if (t == 0) {
        throw IngestionError(path.string() + ":" + std::to_string(line_no) +
                             ": unknown tag '" + std::string(tag) + "'");
      }
      tags |= t;
    }
    lexicon.add(to_lower(trim(fields[0])), tags);
  }
  return lexicon;
}

void PosLexicon::add(std::string token, std::uint8_t tags) {
  entries_[std::move(token)] |= tags;
}

std::uint8_t PosLexicon::tags(std::string_view token) const {
  const auto it = entries_.find(std::string(token));
  if (it != entries_.end()) return it->second;
  return suffix_tags(token);
}

bool PosLexicon::listed(std::string_view token) const {
  return entries_.count(std::string(token)) != 0;
}

StopwordList StopwordList::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open stopword list " + path.string());
  std::unordered_set<std::string> words;
  std::string line;
  while (std::getline(in, line)) {
    const auto word = trim(line);
    if (word.empty() || word.front() == '#') continue;
    words.insert(to_lower(word));
  }
  return StopwordList(std::move(words));
}

std::vector<std::string> KeywordSet::texts() const {
  std::vector<std::string> out;
  out.reserve(keywords.size());
  for (const Keyword& k : keywords) out.push_back(k.text);
  return out;
}

KeywordMiner KeywordMiner::load(const std::filesystem::path& data_dir) {
  KeywordMiner miner;
  miner.stopwords = StopwordList::load(data_dir / "stopwords.txt");
  miner.lexicon = PosLexicon::load(data_dir / "pos_lexicon.tsv");
  return miner;
}

KeywordSet KeywordMiner::extract(std::string_view utterance,
                                 const CorpusStats& stats,
                                 const ConceptGraph* graph) const {
  const std::vector<std::string> tokens = tokenize_words(utterance);
  auto usable = [&](const std::string& t) {
    return !stopwords.contains(t) && !all_digits(t) && lexicon.content_word(t);
  };

  // Candidate text -> (term frequency, idf).
  std::map<std::string, std::pair<std::size_t, double>> candidates;
  for (const std::string& t : tokens) {
    if (!usable(t)) continue;
    auto& c = candidates[t];
    ++c.first;
    c.second = stats.idf(t);
  }
  if (graph != nullptr) {
    for (std::size_t n = 2; n <= options.max_span; ++n) {
      for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
        const auto first = tokens.begin() + static_cast<std::ptrdiff_t>(i);
        const std::vector<std::string> span(
            first, first + static_cast<std::ptrdiff_t>(n));
        if (stopwords.contains(span.front()) ||
            stopwords.contains(span.back())) {
          continue;
        }
        double idf_sum = 0.0;
        std::size_t content = 0;
        bool ok = true;
        for (const std::string& t : span) {
          if (stopwords.contains(t)) continue;
          if (!usable(t)) {
            ok = false;
            break;
          }
          idf_sum += stats.idf(t);
          ++content;
        }
        if (!ok || content == 0) continue;
        const std::string text = join(span, " ");
        if (!graph->find(text)) continue;
        auto& c = candidates[text];
        ++c.first;
        c.second = idf_sum / static_cast<double>(content);
      }
    }
  }

  KeywordSet out;
  for (const auto& [text, c] : candidates) {
    Keyword k;
    k.text = text;
    k.score = static_cast<double>(c.first) * c.second;
    k.in_graph = graph != nullptr && graph->find(text).has_value();
    out.keywords.push_back(std::move(k));
  }
  std::sort(out.keywords.begin(), out.keywords.end(),
            [](const Keyword& a, const Keyword& b) {
              if (a.score != b.score) return a.score > b.score;
              if (a.in_graph != b.in_graph) return a.in_graph;
              return a.text < b.text;
            });
  if (out.keywords.size() > options.k) out.keywords.resize(options.k);
  return out;
}

}  // namespace cskg
