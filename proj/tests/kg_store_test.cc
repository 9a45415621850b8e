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

#include "cskg/kg_store.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <deque>
#include <nlohmann/json.hpp>
#include <random>
#include <string>
#include <vector>

#include "cskg/embedding_store.h"
#include "cskg/error.h"
#include "test_util.h"

namespace cskg {
namespace {

using testing::Edge;
using testing::fixture;
using testing::make_graph;
using testing::make_store;
using testing::TempDir;
using testing::write_file;

TEST(LoadAssertionsTest, ConceptNetRowsWithOneMalformed) {
  LoadReport report;
  const ConceptGraph g =
      load_assertions(fixture("conceptnet_rows.csv"), "en", &report);
  EXPECT_EQ(g.assertion_count(), 2u);
  EXPECT_EQ(report.rows_read, 3u);
  EXPECT_EQ(report.loaded, 2u);
  EXPECT_EQ(report.malformed, 1u);
  EXPECT_EQ(report.skipped(), 1u);
  ASSERT_EQ(report.malformed_samples.size(), 1u);

  const Assertion& a = g.assertion(0);
  EXPECT_EQ(g.surface(a.head), "plate");
  EXPECT_EQ(a.relation, Relation::kAtLocation);
  EXPECT_EQ(g.surface(a.tail), "restaurant");
  EXPECT_DOUBLE_EQ(a.weight, 2.0);
  EXPECT_FALSE(a.sim_weight.has_value());
}

TEST(LoadAssertionsTest, SkipReasonsAreCounted) {
  TempDir dir;
  write_file(
      dir / "dump.csv",
      "/a/1\t/r/RelatedTo\t/c/en/ice_cream\t/c/en/cold\t{\"weight\": 1.0}\n"
      "/a/2\t/r/ExternalURL\t/c/en/a\t/c/en/b\t{\"weight\": 1.0}\n"
      "/a/3\t/r/RelatedTo\t/c/fr/chat\t/c/en/cat\t{\"weight\": 1.0}\n"
      "/a/4\t/r/RelatedTo\t/c/en/same\t/c/en/same\t{\"weight\": 1.0}\n"
      "/a/5\t/r/RelatedTo\t/c/en/a\t/c/en/b\tnot json\n"
      "/a/6\t/r/RelatedTo\t/c/en/caf%C3%A9\t/c/en/coffee\t{\"weight\": 3}\n"
      "/a/7\t/r/IsA\t/c/en/a[1]\t/c/en/b\t{\"weight\": 1.0}\n");
  LoadReport report;
  const ConceptGraph g = load_assertions(dir / "dump.csv", "en", &report);
  EXPECT_EQ(report.rows_read, 7u);
  EXPECT_EQ(report.loaded, 2u);
  EXPECT_EQ(report.unmapped_relation, 1u);
  EXPECT_EQ(report.language_mismatch, 1u);
  EXPECT_EQ(report.self_loops, 1u);
  EXPECT_EQ(report.malformed, 1u);
  EXPECT_EQ(report.invalid_concept, 1u);
  EXPECT_TRUE(g.find("ice_cream").has_value());
  EXPECT_TRUE(g.find("caf\xC3\xA9").has_value());

  LoadReport all_langs;
  load_assertions(dir / "dump.csv", "", &all_langs);
  EXPECT_EQ(all_langs.loaded, 3u);
  EXPECT_EQ(all_langs.language_mismatch, 0u);

  const auto j = report.to_json();
  EXPECT_EQ(j["loaded"], 2);
}

TEST(LoadAssertionsTest, CompactRowsAndComments) {
  TempDir dir;
  write_file(dir / "g.tsv",
             "# comment\n\nplate\tAtLocation\trestaurant\t2.0\n"
             "plate\t/r/IsA\tdish\t1\t0.25\n"
             "plate\tIsA\tdish\tabc\n");
  LoadReport report;
  const ConceptGraph g = load_assertions(dir / "g.tsv", "en", &report);
  EXPECT_EQ(report.rows_read, 3u);
  ASSERT_EQ(g.assertion_count(), 2u);
  EXPECT_EQ(report.malformed, 1u);
  ASSERT_TRUE(g.assertion(1).sim_weight.has_value());
  EXPECT_DOUBLE_EQ(*g.assertion(1).sim_weight, 0.25);
}

TEST(LoadAssertionsTest, ErrorsOnMissingOrEmptyInput) {
  TempDir dir;
  EXPECT_THROW(load_assertions(dir / "absent.tsv"), IngestionError);
  write_file(dir / "empty.tsv", "# nothing\n");
  EXPECT_THROW(load_assertions(dir / "empty.tsv"), EmptyInputError);
}

TEST(LoadAssertionsTest, SaveCompactRoundTrips) {
  TempDir dir;
  const ConceptGraph g = make_graph({
      {"ice cream", Relation::kIsA, "dessert", 1.0 / 3.0, 0.1},
      {"dessert", Relation::kAtLocation, "restaurant", 2.0, std::nullopt},
  });
  save_compact(g, dir / "g.tsv");
  const ConceptGraph back = load_assertions(dir / "g.tsv", "");
  ASSERT_EQ(back.assertion_count(), g.assertion_count());
  for (AssertionId i = 0; i < g.assertion_count(); ++i) {
    const Assertion& a = g.assertion(i);
    const Assertion& b = back.assertion(i);
    EXPECT_EQ(g.surface(a.head), back.surface(b.head));
    EXPECT_EQ(g.surface(a.tail), back.surface(b.tail));
    EXPECT_EQ(a.relation, b.relation);
    EXPECT_EQ(a.weight, b.weight);  // exact: shortest round-trip formatting
    EXPECT_EQ(a.sim_weight, b.sim_weight);
  }
}

TEST(FilterTest, WeightAndSimilarityBoundaries) {
  // Cosines against a are exactly 1, 0 and negative.
  const EmbeddingStore store = make_store({
      {"a", {1.0, 0.0}},
      {"b", {1.0, 0.0}},
      {"c", {0.0, 1.0}},
      {"d", {-1.0, 0.2}},
  });
  const ConceptGraph g = make_graph({
      {"a", Relation::kRelatedTo, "b", 1.0},  // weight at bound, cos 1
      {"a", Relation::kRelatedTo, "c", 1.0},  // cos exactly 0: kept
      {"a", Relation::kRelatedTo, "d", 5.0},  // cos < 0: dropped
      {"b", Relation::kIsA, "c", 0.5},        // weight < 1: dropped
      {"b", Relation::kIsA, "unknown", 2.0},  // no embedding
      {"c", Relation::kHasA, "b", 0.999999},  // just below: dropped
  });
  FilterReport report;
  const ConceptGraph f = filter_graph(g, store, {}, &report);
  EXPECT_EQ(report.input, 6u);
  EXPECT_EQ(report.kept, 2u);
  EXPECT_EQ(report.low_weight, 2u);
  EXPECT_EQ(report.low_similarity, 1u);
  EXPECT_EQ(report.missing_embedding, 1u);
  ASSERT_EQ(f.assertion_count(), 2u);
  EXPECT_EQ(f.surface(f.assertion(0).tail), "b");
  EXPECT_EQ(*f.assertion(0).sim_weight, 1.0);
  EXPECT_EQ(f.surface(f.assertion(1).tail), "c");
  EXPECT_EQ(*f.assertion(1).sim_weight, 0.0);
  EXPECT_FALSE(f.find("d").has_value());
  EXPECT_FALSE(f.find("unknown").has_value());
}

TEST(FilterTest, NegativeCosineDropped) {
  const EmbeddingStore store =
      make_store({{"x", {1.0, 0.0}}, {"y", {-0.2, 0.979795897}}});
  const ConceptGraph g = make_graph({{"x", Relation::kRelatedTo, "y", 3.0}});
  FilterReport report;
  const ConceptGraph f = filter_graph(g, store, {}, &report);
  EXPECT_EQ(f.assertion_count(), 0u);
  EXPECT_EQ(report.low_similarity, 1u);
}

TEST(NeighborsTest, IsolatedStarAndReverse) {
  ConceptGraph::Builder b;
  b.intern("lonely");
  b.add("hub", Relation::kRelatedTo, "a", 1.0);
  b.add("b", Relation::kIsA, "hub", 1.0);
  b.add("hub", Relation::kHasA, "c", 1.0);
  const ConceptGraph g = std::move(b).build();

  EXPECT_TRUE(neighbors(g, "lonely").empty());
  EXPECT_TRUE(neighbors(g, "missing").empty());

  const auto hub = neighbors(g, "hub");
  ASSERT_EQ(hub.size(), 3u);
  EXPECT_EQ(g.surface(hub[0].concept_id), "a");
  EXPECT_EQ(g.surface(hub[1].concept_id), "b");
  EXPECT_EQ(g.surface(hub[2].concept_id), "c");
  EXPECT_TRUE(hub[0].forward);
  EXPECT_FALSE(hub[1].forward);

  const auto from_b = neighbors(g, "b");
  ASSERT_EQ(from_b.size(), 1u);
  EXPECT_EQ(g.surface(from_b[0].concept_id), "hub");
  EXPECT_EQ(from_b[0].assertion, 1u);
  EXPECT_TRUE(from_b[0].forward);
  const auto from_a = neighbors(g, "a");
  ASSERT_EQ(from_a.size(), 1u);
  EXPECT_FALSE(from_a[0].forward);
}

TEST(NeighborsTest, SymmetryProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    ConceptGraph::Builder b;
    std::uniform_int_distribution<int> node(0, 11);
    for (int e = 0; e < 25; ++e) {
      b.add("n" + std::to_string(node(rng)), Relation::kRelatedTo,
            "n" + std::to_string(node(rng)), 1.0);
    }
    const ConceptGraph g = std::move(b).build();
    for (ConceptId u = 0; u < g.concept_count(); ++u) {
      for (const Neighbor& n : g.neighbors(u)) {
        const auto back = g.neighbors(n.concept_id);
        const bool found = std::any_of(back.begin(), back.end(), [&](auto& m) {
          return m.concept_id == u && m.assertion == n.assertion &&
                 m.forward != n.forward;
        });
        EXPECT_TRUE(found);
        const Assertion& a = g.assertion(n.assertion);
        EXPECT_EQ(n.forward ? a.head : a.tail, u);
      }
    }
  }
}

TEST(HopDistanceTest, Examples) {
  const ConceptGraph g = make_graph({
      {"a", Relation::kRelatedTo, "b"},
      {"b", Relation::kRelatedTo, "c"},
      {"c", Relation::kRelatedTo, "d"},
  });
  const auto id = [&](const char* s) { return *g.find(s); };
  EXPECT_EQ(hop_distance(g, id("a"), id("a")), HopDistance::kSame);
  EXPECT_EQ(hop_distance(g, id("a"), id("b")), HopDistance::kAdjacent);
  EXPECT_EQ(hop_distance(g, id("a"), id("c")), HopDistance::kTwoHops);
  EXPECT_EQ(hop_distance(g, id("a"), id("d")), HopDistance::kFar);
}

// BFS distance capped at 3.
int bfs_distance(const ConceptGraph& g, ConceptId s, ConceptId t) {
  std::vector<int> dist(g.concept_count(), -1);
  std::deque<ConceptId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const ConceptId u = queue.front();
    queue.pop_front();
    for (const Neighbor& n : g.neighbors(u)) {
      if (dist[n.concept_id] < 0) {
        dist[n.concept_id] = dist[u] + 1;
        queue.push_back(n.concept_id);
      }
    }
  }
  return dist[t] < 0 ? 3 : std::min(dist[t], 3);
}

TEST(HopDistanceTest, MatchesBfsOracle) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    ConceptGraph::Builder b;
    std::uniform_int_distribution<int> node(0, 14);
    for (int e = 0; e < 18; ++e) {
      b.add("n" + std::to_string(node(rng)), Relation::kRelatedTo,
            "n" + std::to_string(node(rng)), 1.0);
    }
    const ConceptGraph g = std::move(b).build();
    for (ConceptId s = 0; s < g.concept_count(); ++s) {
      for (ConceptId t = 0; t < g.concept_count(); ++t) {
        ASSERT_EQ(static_cast<int>(hop_distance(g, s, t)),
                  bfs_distance(g, s, t));
        ASSERT_EQ(hop_distance(g, s, t), hop_distance(g, t, s));
      }
    }
  }
}

TEST(LookupTest, ConceptNetRows) {
  const ConceptGraph g = load_assertions(fixture("conceptnet_rows.csv"));
  auto r = lookup(g, "plate", "restaurant", Relation::kAtLocation);
  EXPECT_TRUE(r.pair_exists);
  EXPECT_TRUE(r.assertion_exists);
  r = lookup(g, "plate", "restaurant", Relation::kCreatedBy);
  EXPECT_TRUE(r.pair_exists);
  EXPECT_FALSE(r.assertion_exists);
  r = lookup(g, "plate", "programmer");
  EXPECT_FALSE(r.pair_exists);
  EXPECT_FALSE(r.assertion_exists);
}

TEST(LookupTest, DirectionHandling) {
  const ConceptGraph g =
      make_graph({{"plate", Relation::kAtLocation, "restaurant"}});
  // Pair existence ignores direction; the exact assertion does not unless
  // asked to.
  auto r = lookup(g, "restaurant", "plate", Relation::kAtLocation);
  EXPECT_TRUE(r.pair_exists);
  EXPECT_FALSE(r.assertion_exists);
  r = lookup(g, "restaurant", "plate", Relation::kAtLocation, true);
  EXPECT_TRUE(r.assertion_exists);
  r = lookup(g, "Plate", "RESTAURANT", Relation::kAtLocation);
  EXPECT_TRUE(r.assertion_exists);
}

}  // namespace
}  // namespace cskg
