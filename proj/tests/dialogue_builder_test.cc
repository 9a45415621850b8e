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

#include "cskg/dialogue_builder.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "cskg/error.h"
#include "test_util.h"

namespace cskg {
namespace {

using testing::data_dir;
using testing::fixture;
using testing::make_graph;
using testing::make_store;
using testing::TempDir;
using testing::write_file;

struct DietFixture {
  EmbeddingStore store = load_embeddings(fixture("diet_vectors.txt"));
  ConceptGraph graph =
      filter_graph(load_assertions(fixture("diet_graph.tsv")), store);
  SimilarityCache cache{store};
  KeywordMiner miner = KeywordMiner::load(data_dir());
};

std::vector<std::string> chain_texts(const DialogueRecord& r) {
  std::vector<std::string> out;
  for (const auto& c : r.cs_chains) out.push_back(to_string(c));
  return out;
}

TEST(ReadDialoguesTest, SpeakersAndAlternation) {
  const auto d = read_dialogues(fixture("engineered_dialogues.json"));
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].id, "d1");
  EXPECT_EQ(d[1].turns.size(), 4u);
  EXPECT_EQ(d[1].turns[0].speaker, Speaker::kUser);
  EXPECT_EQ(d[1].turns[3].speaker, Speaker::kSystem);

  TempDir dir;
  write_file(dir / "bad.json",
             "{\"x\": {\"turns\": [\"a\"], \"speakers\": "
             "[\"user\", \"system\"]}}");
  EXPECT_THROW(read_dialogues(dir / "bad.json"), IngestionError);
  write_file(dir / "bad2.json", "[1, 2]");
  EXPECT_THROW(read_dialogues(dir / "bad2.json"), IngestionError);
  write_file(dir / "bad3.json",
             "{\"x\": {\"turns\": [\"a\"], \"speakers\": "
             "[\"robot\"]}}");
  EXPECT_THROW(read_dialogues(dir / "bad3.json"), IngestionError);
  write_file(dir / "plain.json", "{\"x\": [\"hi\", \"hello\"]}");
  EXPECT_EQ(read_dialogues(dir / "plain.json")[0].turns[1].speaker,
            Speaker::kSystem);
}

TEST(BuildRecordsTest, DietDialogue) {
  DietFixture f;
  const auto dialogues = read_dialogues(fixture("diet_dialogue.json"));
  const auto stats = dialogue_stats(dialogues);
  const auto build = build_records(dialogues, f.graph, f.cache, f.miner, stats);
  ASSERT_EQ(build.records.size(), 1u);
  const DialogueRecord& r = build.records[0];
  EXPECT_EQ(r.response_turn, 1u);
  const auto chains = chain_texts(r);
  ASSERT_EQ(chains.size(), 3u);
  EXPECT_EQ(chains[0], "diet [has subevent of] lose weight");
  EXPECT_EQ(r.provenance[0], Provenance::kContextOnly);
  // The response keywords eat and healthy link back to diet.
  std::vector<std::string> rest(chains.begin() + 1, chains.end());
  std::sort(rest.begin(), rest.end());
  EXPECT_EQ(rest[0], "diet [related to] eat");
  EXPECT_EQ(rest[1], "diet [related to] food, food [has property] healthy");
  EXPECT_EQ(r.provenance[1], Provenance::kContextResponse);
  EXPECT_EQ(r.provenance[2], Provenance::kContextResponse);
  EXPECT_EQ(build.stats.context_only, 1u);
  EXPECT_EQ(build.stats.context_response, 2u);
}

TEST(BuildRecordsTest, EngineeredStatistics) {
  DietFixture f;
  const auto dialogues = read_dialogues(fixture("engineered_dialogues.json"));
  const auto build = build_records(dialogues, f.graph, f.cache, f.miner,
                                   dialogue_stats(dialogues));
  const DialogueStats& s = build.stats;
  EXPECT_EQ(s.dialogues, 2u);
  EXPECT_EQ(s.records, 3u);  // d1 turn 1, d2 turns 1 and 3
  EXPECT_EQ(s.records_with_cs, 2u);
  EXPECT_EQ(s.context_only, 2u);
  EXPECT_EQ(s.context_response, 2u);
  EXPECT_EQ(s.both_sides, 0u);
  EXPECT_DOUBLE_EQ(s.context_only_pct(), 50.0);
  EXPECT_DOUBLE_EQ(s.context_response_pct(), 50.0);
  EXPECT_DOUBLE_EQ(s.both_sides_pct(), 0.0);
  // d2 turn 1 has nothing to extract but is still emitted.
  EXPECT_TRUE(build.records[1].cs_chains.empty());
  EXPECT_EQ(serialize_record(build.records[1]).second,
            "[SYSTEM] Hi, how are you?");
}

TEST(BuildRecordsTest, BothSidesProvenance) {
  DietFixture f;
  TempDir dir;
  write_file(dir / "d.json",
             "{\"x\": [\"I eat on a diet.\", \"A diet is good.\"]}");
  const auto dialogues = read_dialogues(dir / "d.json");
  const auto build = build_records(dialogues, f.graph, f.cache, f.miner,
                                   dialogue_stats(dialogues));
  ASSERT_EQ(build.records.size(), 1u);
  ASSERT_EQ(build.records[0].cs_chains.size(), 1u);
  EXPECT_EQ(to_string(build.records[0].cs_chains[0]), "diet [related to] eat");
  EXPECT_EQ(build.records[0].provenance[0], Provenance::kBothSides);
  EXPECT_DOUBLE_EQ(build.stats.both_sides_pct(), 100.0);
}

TEST(BuildRecordsTest, PercentagesSumToHundred) {
  for (std::size_t a : {0u, 1u, 3u, 7u}) {
    for (std::size_t b : {0u, 2u, 5u}) {
      for (std::size_t c : {0u, 1u, 4u}) {
        DialogueStats s;
        s.context_only = a;
        s.context_response = b;
        s.both_sides = c;
        const double sum = s.context_only_pct() + s.context_response_pct() +
                           s.both_sides_pct();
        EXPECT_NEAR(sum, a + b + c == 0 ? 0.0 : 100.0, 1e-9);
      }
    }
  }
}

TEST(BuildRecordsTest, WorkerCountDoesNotChangeOutput) {
  DietFixture f;
  auto dialogues = read_dialogues(fixture("engineered_dialogues.json"));
  const auto diet = read_dialogues(fixture("diet_dialogue.json"));
  dialogues.insert(dialogues.end(), diet.begin(), diet.end());
  const auto stats = dialogue_stats(dialogues);
  DialogueOptions one, four;
  four.workers = 4;
  const auto a =
      build_records(dialogues, f.graph, f.cache, f.miner, stats, one);
  const auto b =
      build_records(dialogues, f.graph, f.cache, f.miner, stats, four);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(dialogue_record_to_json(a.records[i]),
              dialogue_record_to_json(b.records[i]));
  }
}

TEST(SerializeRecordTest, DietRecordFormat) {
  DialogueRecord r;
  r.context = {{Speaker::kUser, "I'm on a diet to lose weight."}};
  r.cs_chains = {
      TripletChain{{{"diet", Relation::kHasSubevent, "lose weight"}}}};
  r.provenance = {Provenance::kContextOnly};
  r.response = "Don't forget to eat more healthy.";
  const auto [input, target] = serialize_record(r);
  EXPECT_EQ(input, "[USER] I'm on a diet to lose weight.");
  EXPECT_EQ(target,
            "<|commonsense|> diet [has subevent of] lose weight; [SYSTEM] "
            "Don't forget to eat more healthy.");
  const auto [cs, response] = split_target(target);
  EXPECT_EQ(cs, "<|commonsense|> diet [has subevent of] lose weight;");
  EXPECT_EQ(response, "Don't forget to eat more healthy.");
}

TEST(SerializeRecordTest, EmptyChainsAndContextCap) {
  DialogueRecord r;
  r.context = {{Speaker::kUser, "u1"},
               {Speaker::kSystem, "s1"},
               {Speaker::kUser, "u2"},
               {Speaker::kSystem, "s2"}};
  r.response = "ok";
  const auto [input, target] = serialize_record(r);
  EXPECT_EQ(input, "[SYSTEM] s1 [USER] u2 [SYSTEM] s2");
  EXPECT_EQ(target, "[SYSTEM] ok");
  const auto j = dialogue_record_to_json(r);
  EXPECT_EQ(j["provenance"].size(), 0u);
  EXPECT_EQ(j["input"], input);
}

TEST(BuildRecordsTest, ContextWindowIsCapped) {
  DietFixture f;
  TempDir dir;
  write_file(dir / "d.json",
             "{\"x\": [\"a\", \"b\", \"c\", \"d\", \"e\", \"f\"]}");
  const auto dialogues = read_dialogues(dir / "d.json");
  const auto build = build_records(dialogues, f.graph, f.cache, f.miner,
                                   dialogue_stats(dialogues));
  ASSERT_EQ(build.records.size(), 3u);  // turns 1, 3, 5
  EXPECT_EQ(build.records[0].context.size(), 1u);
  EXPECT_EQ(build.records[2].context.size(), 3u);
  EXPECT_EQ(build.records[2].context.front().text, "c");
}

}  // namespace
}  // namespace cskg
