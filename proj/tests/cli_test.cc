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

// Drives the cskg binary as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <nlohmann/json.hpp>
#include <string>

#include "test_util.h"

namespace cskg {
namespace {

using testing::fixture;
using testing::read_file;
using testing::TempDir;
using testing::write_file;

struct Result {
  int status = -1;
  std::string output;  // stdout and stderr
};

Result run(const std::string& args) {
  const std::string cmd = std::string(CSKG_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), pipe)) > 0)
    r.output.append(buf, n);
  const int raw = ::pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string q(const std::filesystem::path& p) { return "'" + p.string() + "'"; }

std::string walk_inputs() {
  return "--graph " + q(fixture("walk_graph.tsv")) + " --embeddings " +
         q(fixture("walk_vectors.txt"));
}

TEST(CliTest, HelpAndUsageErrors) {
  const Result help = run("--help");
  EXPECT_EQ(help.status, 0);
  EXPECT_NE(help.output.find("eval-triplets"), std::string::npos);
  EXPECT_NE(run("").status, 0);
  EXPECT_NE(run("walk --return-param -1").status, 0);
  EXPECT_NE(run("frobnicate").status, 0);
}

TEST(CliTest, WalkIsByteIdenticalForOneSeed) {
  TempDir dir;
  const std::string common = walk_inputs() + " --cache-dir " + q(dir / "cache");
  const Result a = run("walk " + common + " --seed 11 --out " + q(dir / "a"));
  ASSERT_EQ(a.status, 0) << a.output;
  const Result b = run("walk " + common + " --seed 11 --out " + q(dir / "b"));
  ASSERT_EQ(b.status, 0) << b.output;
  const Result c = run("walk " + walk_inputs() +
                       " --seed 11 --no-cache -j 4 --out " + q(dir / "c"));
  ASSERT_EQ(c.status, 0) << c.output;
  for (const char* split : {"train.jsonl", "valid.jsonl", "test.jsonl"}) {
    const std::string bytes = read_file(dir / "a" / split);
    EXPECT_FALSE(bytes.empty()) << split;
    EXPECT_EQ(read_file(dir / "b" / split), bytes) << split;
    EXPECT_EQ(read_file(dir / "c" / split), bytes) << split;
  }
  const Result d = run("walk " + common + " --seed 12 --out " + q(dir / "d"));
  ASSERT_EQ(d.status, 0) << d.output;
  EXPECT_NE(read_file(dir / "d" / "train.jsonl") +
                read_file(dir / "d" / "test.jsonl"),
            read_file(dir / "a" / "train.jsonl") +
                read_file(dir / "a" / "test.jsonl"));
  const auto manifest =
      nlohmann::json::parse(read_file(dir / "a" / "manifest.json"));
  EXPECT_EQ(manifest["counts"]["walks"], manifest["counts"]["expected_walks"]);
  EXPECT_EQ(manifest["config"]["walk"]["split_seed"], 11);
}

TEST(CliTest, EvalTripletsPrintsAccuracies) {
  TempDir dir;
  const Result r =
      run("eval-triplets --graph " + q(fixture("metrics_graph.tsv")) +
          " --embeddings " + q(fixture("metrics_vectors.txt")) +
          " --generations " + q(fixture("generations_7of10.txt")) +
          " --no-cache --out " + q(dir / "eval"));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("concepts accuracy:  70.00%"), std::string::npos)
      << r.output;
  EXPECT_NE(r.output.find("assertion accuracy: 40.00%"), std::string::npos)
      << r.output;
  EXPECT_TRUE(std::filesystem::exists(dir / "eval" / "eval_report.json"));
}

TEST(CliTest, ExtractCommongenStats) {
  TempDir dir;
  const Result r =
      run("extract-commongen --graph " + q(fixture("surf_graph.tsv")) +
          " --embeddings " + q(fixture("surf_vectors.txt")) + " --commongen " +
          q(fixture("surf_commongen.jsonl")) + " --no-cache --out " +
          q(dir / "cg"));
  ASSERT_EQ(r.status, 0) << r.output;
  const auto stats =
      nlohmann::json::parse(read_file(dir / "cg" / "two_way_stats.json"));
  EXPECT_EQ(stats["entries"], 2);
  EXPECT_EQ(stats["triplet_sentence_pairs"], 4);
  EXPECT_DOUBLE_EQ(stats["mean_cs_triplets"].get<double>(), 3.0);
}

TEST(CliTest, ExtractDialoguesUsesDataDir) {
  TempDir dir;
  const std::string args = "extract-dialogues --graph " +
                           q(fixture("diet_graph.tsv")) + " --embeddings " +
                           q(fixture("diet_vectors.txt")) + " --dialogues " +
                           q(fixture("engineered_dialogues.json")) +
                           " --no-cache --out " + q(dir / "dlg");
  const Result r = run(args + " --data-dir " + q(testing::data_dir()));
  ASSERT_EQ(r.status, 0) << r.output;
  EXPECT_NE(r.output.find("context-only 50%"), std::string::npos) << r.output;
  EXPECT_NE(run(args + " --data-dir " + q(dir / "none")).status, 0);
}

TEST(CliTest, MissingInputFails) {
  TempDir dir;
  Result r = run("walk --embeddings " + q(fixture("walk_vectors.txt")) +
                 " --out " + q(dir / "x"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("--graph"), std::string::npos) << r.output;
  r = run("load --graph " + q(dir / "absent.tsv") + " --embeddings " +
          q(fixture("walk_vectors.txt")) + " --out " + q(dir / "x"));
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.output.find("not found"), std::string::npos) << r.output;
}

TEST(CliTest, ConfigFileSuppliesOptions) {
  TempDir dir;
  write_file(dir / "run.toml",
             "graph = \"" + fixture("walk_graph.tsv").string() + "\"\n" +
                 "embeddings = \"" + fixture("walk_vectors.txt").string() +
                 "\"\n" + "passes = 3\n" + "seed = 5\n" + "no-cache = true\n");
  const Result r =
      run("walk --config " + q(dir / "run.toml") + " --out " + q(dir / "out"));
  ASSERT_EQ(r.status, 0) << r.output;
  const auto manifest =
      nlohmann::json::parse(read_file(dir / "out" / "manifest.json"));
  EXPECT_EQ(manifest["config"]["walk"]["passes"], 3);
  EXPECT_EQ(manifest["config"]["walk"]["seed"], 5);
  EXPECT_EQ(
      manifest["counts"]["expected_walks"].get<std::size_t>(),
      3 * manifest["counts"]["eligible_start_concepts"].get<std::size_t>());
}

}  // namespace
}  // namespace cskg
