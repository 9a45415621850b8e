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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "cskg/error.h"
#include "cskg/kg_store.h"
#include "test_util.h"

namespace cskg {
namespace {

using testing::data_dir;
using testing::make_graph;
using testing::TempDir;
using testing::write_file;

bool has(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

TEST(CorpusStatsTest, DocumentFrequency) {
  const std::vector<std::string> docs = {"a b", "b c"};
  const CorpusStats s = build_stats(docs);
  EXPECT_EQ(s.document_count, 2u);
  EXPECT_EQ(s.df("a"), 1u);
  EXPECT_EQ(s.df("b"), 2u);
  EXPECT_EQ(s.df("c"), 1u);
  EXPECT_EQ(s.df("zzz"), 0u);
}

TEST(CorpusStatsTest, RepeatsAndEmptyDocuments) {
  const std::vector<std::string> docs = {"b b b", "", "B."};
  const CorpusStats s = build_stats(docs);
  EXPECT_EQ(s.document_count, 3u);
  EXPECT_EQ(s.df("b"), 2u);
  EXPECT_DOUBLE_EQ(s.idf("b"), std::log(4.0 / 3.0));
  EXPECT_THROW(build_stats(std::vector<std::string>{}), EmptyInputError);
}

TEST(SuffixTagsTest, Rules) {
  EXPECT_EQ(suffix_tags("quickly"), pos::kAdverb);
  EXPECT_EQ(suffix_tags("running"), pos::kVerb);
  EXPECT_EQ(suffix_tags("walked"), pos::kVerb);
  EXPECT_EQ(suffix_tags("wonderful"), pos::kAdjective);
  EXPECT_EQ(suffix_tags("famous"), pos::kAdjective);
  EXPECT_EQ(suffix_tags("2024"), pos::kOther);
  EXPECT_EQ(suffix_tags("table"), pos::kNoun);
  // Too short to carry the suffix.
  EXPECT_EQ(suffix_tags("fly"), pos::kNoun);
}

TEST(PosLexiconTest, LoadAndLookup) {
  TempDir dir;
  write_file(dir / "lex.tsv", "# c\nrun\tn,v\nvery\tadv\nthe\tother\n");
  const PosLexicon lex = PosLexicon::load(dir / "lex.tsv");
  EXPECT_EQ(lex.size(), 3u);
  EXPECT_EQ(lex.tags("run"), pos::kNoun | pos::kVerb);
  EXPECT_FALSE(lex.content_word("very"));
  EXPECT_FALSE(lex.content_word("the"));
  EXPECT_TRUE(lex.content_word("unlisted"));
  EXPECT_FALSE(lex.listed("unlisted"));
  write_file(dir / "bad.tsv", "run\tverbish\n");
  EXPECT_THROW(PosLexicon::load(dir / "bad.tsv"), IngestionError);
  write_file(dir / "bad2.tsv", "run n\n");
  EXPECT_THROW(PosLexicon::load(dir / "bad2.tsv"), IngestionError);
  EXPECT_THROW(PosLexicon::load(dir / "absent.tsv"), IngestionError);
}

TEST(ShippedDataTest, LoadsAndCoversBasics) {
  const KeywordMiner miner = KeywordMiner::load(data_dir());
  for (const char* w : {"i'm", "on", "a", "to", "don't", "more", "the"}) {
    EXPECT_TRUE(miner.stopwords.contains(w)) << w;
  }
  EXPECT_GT(miner.lexicon.size(), 100u);
  EXPECT_TRUE(miner.lexicon.content_word("diet"));
  EXPECT_TRUE(miner.lexicon.content_word("healthy"));
  EXPECT_TRUE(miner.lexicon.content_word("eat"));
}

TEST(KeywordMinerTest, DietUtterance) {
  const KeywordMiner miner = KeywordMiner::load(data_dir());
  const std::vector<std::string> docs = {"I'm on a diet to lose weight.",
                                         "Don't forget to eat more healthy."};
  const CorpusStats stats = build_stats(docs);
  const auto words = miner.extract(docs[0], stats).texts();
  EXPECT_TRUE(has(words, "diet"));
  EXPECT_TRUE(has(words, "lose"));
  EXPECT_TRUE(has(words, "weight"));
  for (const char* stop : {"i'm", "on", "a", "to"}) {
    EXPECT_FALSE(has(words, stop)) << stop;
  }
  // With the graph, the multi-word concept is found as well.
  const ConceptGraph g =
      make_graph({{"diet", Relation::kHasSubevent, "lose weight", 2.0}});
  const auto set = miner.extract(docs[0], stats, &g);
  EXPECT_TRUE(has(set.texts(), "lose weight"));
  for (const Keyword& k : set.keywords) {
    EXPECT_EQ(k.in_graph, k.text == "diet" || k.text == "lose weight");
  }
}

TEST(KeywordMinerTest, AllStopwordsGiveNothing) {
  const KeywordMiner miner = KeywordMiner::load(data_dir());
  const std::vector<std::string> docs = {"I am on it to the"};
  EXPECT_TRUE(miner.extract(docs[0], build_stats(docs)).keywords.empty());
  EXPECT_TRUE(miner.extract("", build_stats(docs)).keywords.empty());
}

TEST(KeywordMinerTest, RarerTokenScoresHigher) {
  KeywordMiner miner;
  CorpusStats stats;
  stats.document_count = 10;
  stats.doc_frequency = {{"apple", 1}, {"pear", 2}};
  const auto set = miner.extract("apple pear", stats);
  ASSERT_EQ(set.keywords.size(), 2u);
  EXPECT_EQ(set.keywords[0].text, "apple");
  EXPECT_DOUBLE_EQ(set.keywords[0].score, std::log(11.0 / 2.0));
  EXPECT_DOUBLE_EQ(set.keywords[1].score, std::log(11.0 / 3.0));
}

TEST(KeywordMinerTest, TermFrequencyAndTopK) {
  KeywordMiner miner;
  miner.options.k = 2;
  CorpusStats stats;
  stats.document_count = 4;
  stats.doc_frequency = {{"x", 1}, {"y", 1}, {"z", 1}};
  const auto set = miner.extract("z x x y", stats);
  ASSERT_EQ(set.keywords.size(), 2u);
  EXPECT_EQ(set.keywords[0].text, "x");  // tf 2
  EXPECT_EQ(set.keywords[1].text, "y");  // tie with z, by text
}

TEST(KeywordMinerTest, NonContentWordsDropped) {
  KeywordMiner miner;
  miner.lexicon.add("slowly", pos::kAdverb);
  CorpusStats stats;
  stats.document_count = 1;
  const auto set = miner.extract("slowly quietly 42 house", stats);
  EXPECT_EQ(set.texts(), std::vector<std::string>{"house"});
}

}  // namespace
}  // namespace cskg
