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

#include "cskg/pipeline.h"

#include <fstream>
#include <ostream>
#include <vector>

#include "cskg/corpus_forge.h"
#include "cskg/cs_extractor.h"
#include "cskg/dialogue_builder.h"
#include "cskg/digest.h"
#include "cskg/error.h"
#include "cskg/keyword_miner.h"
#include "cskg/metrics.h"
#include "cskg/text.h"
#include "cskg/triplet_codec.h"
#include "cskg/walk_engine.h"

namespace cskg {
namespace {

// Bump when the snapshot layout or the filter semantics change.
constexpr std::string_view kSnapshotVersion = "cskg-snapshot-1";

void require_file(const std::filesystem::path& path, const char* what) {
  if (path.empty()) {
    throw InvalidArgumentError(std::string("missing required input: --") +
                               what);
  }
  if (!std::filesystem::is_regular_file(path)) {
    throw IngestionError(std::string(what) +
                         " file not found: " + path.string());
  }
}

void require_graph_inputs(const RunConfig& config) {
  require_file(config.graph, "graph");
  require_file(config.embeddings, "embeddings");
}

void prepare_out(const RunConfig& config) {
  std::error_code ec;
  std::filesystem::create_directories(config.out, ec);
  if (ec) {
    throw IngestionError("cannot create output directory " +
                         config.out.string() + ": " + ec.message());
  }
}

std::vector<nlohmann::json> examples_json(
    const std::vector<PromptedExample>& examples) {
  std::vector<nlohmann::json> rows;
  rows.reserve(examples.size());
  for (const auto& e : examples) rows.push_back(example_to_json(e));
  return rows;
}

void write_corpus(const CorpusSplit& corpus, const std::filesystem::path& dir,
                  Manifest* manifest) {
  for (Split s : {Split::kTrain, Split::kValid, Split::kTest}) {
    const auto& part = s == Split::kTrain   ? corpus.train
                       : s == Split::kValid ? corpus.valid
                                            : corpus.test;
    const auto path = dir / (std::string(split_name(s)) + ".jsonl");
    write_jsonl(path, examples_json(part));
    manifest->add_output(path);
    manifest->set(std::string(split_name(s)), part.size());
  }
}

std::vector<PromptedExample> read_split(const std::filesystem::path& path) {
  std::vector<PromptedExample> out;
  for (const auto& row : read_jsonl(path)) {
    out.push_back(example_from_json(row));
  }
  return out;
}

// One generation per line: plain text, a JSON string, or a JSON object with
// one of the usual text keys. Dialogue targets keep only their commonsense
// segment.
std::vector<std::string> read_generations(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestionError("cannot open generations " + path.string());
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::string_view text = trim(line);
    if (text.empty()) continue;
    std::string value(text);
    if (text.front() == '{' || text.front() == '"') {
      const auto j = nlohmann::json::parse(text, nullptr, false);
      if (j.is_string()) {
        value = j.get<std::string>();
      } else if (j.is_object()) {
        for (const char* key : {"generation", "text", "output", "target"}) {
          if (j.contains(key) && j[key].is_string()) {
            value = j[key].get<std::string>();
            break;
          }
        }
      }
    }
    if (value.find(kSystemMarker) != std::string::npos) {
      value = std::string(split_target(value).first);
    }
    out.push_back(std::move(value));
  }
  return out;
}

}  // namespace

std::string snapshot_key(const RunConfig& config) {
  const nlohmann::json key = {
      {"version", kSnapshotVersion},
      {"graph", to_hex(sha256_file(config.graph))},
      {"embeddings", to_hex(sha256_file(config.embeddings))},
      {"lang", config.lang},
      {"vocab_limit", config.vocab_limit ? nlohmann::json(*config.vocab_limit)
                                         : nlohmann::json(nullptr)},
      {"min_weight", config.filter.min_weight},
      {"min_sim", config.filter.min_sim}};
  return to_hex(sha256(key.dump()));
}

LoadedGraph load_filtered_graph(const RunConfig& config) {
  require_file(config.graph, "graph");
  require_file(config.embeddings, "embeddings");

  LoadedGraph out;
  EmbeddingLoadReport emb_report;
  out.embeddings =
      load_embeddings(config.embeddings, config.vocab_limit, &emb_report);
  out.summary["embeddings"] = {{"lines_read", emb_report.lines_read},
                               {"loaded", emb_report.loaded},
                               {"header", emb_report.header},
                               {"bad_arity", emb_report.bad_arity},
                               {"bad_number", emb_report.bad_number},
                               {"duplicates", emb_report.duplicates},
                               {"dim", out.embeddings.dim()}};

  std::filesystem::path snapshot, sidecar;
  if (!config.cache_dir.empty()) {
    const std::string key = snapshot_key(config);
    snapshot = config.cache_dir / ("graph-" + key.substr(0, 32) + ".tsv");
    sidecar = snapshot;
    sidecar.replace_extension(".json");
    out.snapshot = snapshot;
    if (std::filesystem::is_regular_file(snapshot) &&
        std::filesystem::is_regular_file(sidecar)) {
      std::ifstream in(sidecar);
      auto cached = nlohmann::json::parse(in, nullptr, false);
      if (!cached.is_discarded() && cached.value("key", "") == key) {
        out.graph = load_assertions(snapshot, "");
        out.from_snapshot = true;
        out.summary["graph"] = cached["graph"];
        out.summary["filter"] = cached["filter"];
      }
    }
  }

  if (!out.from_snapshot) {
    LoadReport load_report;
    const ConceptGraph raw =
        load_assertions(config.graph, config.lang, &load_report);
    FilterReport filter_report;
    out.graph =
        filter_graph(raw, out.embeddings, config.filter, &filter_report);
    out.summary["graph"] = load_report.to_json();
    out.summary["filter"] = filter_report.to_json();
    if (out.graph.empty()) {
      throw EmptyInputError("no assertion survived filtering");
    }
    if (!snapshot.empty()) {
      std::filesystem::create_directories(config.cache_dir);
      // Write to temporaries first so a crash never leaves a torn snapshot.
      const auto tmp_tsv = snapshot.string() + ".tmp";
      const auto tmp_json = sidecar.string() + ".tmp";
      save_compact(out.graph, tmp_tsv);
      write_json(tmp_json, {{"key", snapshot_key(config)},
                            {"graph", out.summary["graph"]},
                            {"filter", out.summary["filter"]}});
      std::filesystem::rename(tmp_tsv, snapshot);
      std::filesystem::rename(tmp_json, sidecar);
    }
  }
  out.summary["concepts"] = out.graph.concept_count();
  out.summary["assertions"] = out.graph.assertion_count();
  out.summary["from_snapshot"] = out.from_snapshot;
  return out;
}

std::size_t eligible_start_count(const ConceptGraph& graph,
                                 const EmbeddingStore& embeddings) {
  std::size_t n = 0;
  for (ConceptId c = 0; c < graph.concept_count(); ++c) {
    for (const Neighbor& nb : graph.neighbors(c)) {
      const auto w =
          edge_weight(graph, embeddings, graph.assertion(nb.assertion));
      if (w && *w > 0.0) {
        ++n;
        break;
      }
    }
  }
  return n;
}

nlohmann::json run_load(const RunConfig& config, std::ostream& log) {
  config.validate();
  require_graph_inputs(config);
  prepare_out(config);
  Manifest manifest("load", config);
  manifest.add_input("graph", config.graph);
  manifest.add_input("embeddings", config.embeddings);

  const LoadedGraph loaded = load_filtered_graph(config);
  const auto graph_path = config.out / "graph.tsv";
  save_compact(loaded.graph, graph_path);
  manifest.add_output(graph_path);
  const auto summary_path = config.out / "load_summary.json";
  write_json(summary_path, loaded.summary);
  manifest.add_output(summary_path);

  manifest.set("concepts", loaded.graph.concept_count());
  manifest.set("assertions", loaded.graph.assertion_count());
  manifest.set("rows_read", loaded.summary["graph"]["rows_read"]);
  manifest.set("filter_kept", loaded.summary["filter"]["kept"]);
  manifest.write(config.out);

  log << "graph: " << loaded.graph.concept_count() << " concepts, "
      << loaded.graph.assertion_count() << " assertions"
      << (loaded.from_snapshot ? " (snapshot)" : "") << "\n"
      << "load:   " << loaded.summary["graph"].dump() << "\n"
      << "filter: " << loaded.summary["filter"].dump() << "\n";
  return manifest.json();
}

nlohmann::json run_walk(const RunConfig& config, std::ostream& log) {
  config.validate();
  require_graph_inputs(config);
  prepare_out(config);
  Manifest manifest("walk", config);
  manifest.add_input("graph", config.graph);
  manifest.add_input("embeddings", config.embeddings);

  const LoadedGraph loaded = load_filtered_graph(config);
  GenerateOptions gen;
  gen.workers = config.workers;
  const auto walks =
      generate_walks(loaded.graph, loaded.embeddings, config.walk, gen);
  if (walks.empty()) throw EmptyInputError("no walk could be generated");

  if (config.emit_walks) {
    std::vector<nlohmann::json> rows;
    rows.reserve(walks.size());
    for (const Walk& w : walks) rows.push_back(walk_to_json(loaded.graph, w));
    const auto path = config.out / "walks.jsonl";
    write_jsonl(path, rows);
    manifest.add_output(path);
  }

  const CorpusSplit corpus =
      build_corpus(loaded.graph, walks, config.split_seed, config.ratios);
  write_corpus(corpus, config.out, &manifest);

  const std::size_t eligible =
      eligible_start_count(loaded.graph, loaded.embeddings);
  manifest.set("concepts", loaded.graph.concept_count());
  manifest.set("assertions", loaded.graph.assertion_count());
  manifest.set("eligible_start_concepts", eligible);
  manifest.set("expected_walks", eligible * config.walk.passes);
  manifest.set("walks", walks.size());
  manifest.set("examples", corpus.size());
  manifest.set("duplicate_chains", corpus.duplicates);
  manifest.write(config.out);

  log << "walks: " << walks.size() << " (" << config.walk.passes << " passes x "
      << eligible << " eligible start concepts)\n"
      << "examples: " << corpus.size() << " unique, " << corpus.duplicates
      << " duplicate chains\n"
      << "split: train " << corpus.train.size() << ", valid "
      << corpus.valid.size() << ", test " << corpus.test.size() << "\n";
  return manifest.json();
}

nlohmann::json run_resample(const RunConfig& config, std::ostream& log) {
  config.validate();
  if (config.corpus.empty()) {
    throw InvalidArgumentError("missing required input: --corpus");
  }
  std::error_code ec;
  if (std::filesystem::equivalent(config.corpus, config.out, ec)) {
    throw InvalidArgumentError("--out must differ from --corpus");
  }
  CorpusSplit corpus;
  for (Split s : {Split::kTrain, Split::kValid, Split::kTest}) {
    const auto path = config.corpus / (std::string(split_name(s)) + ".jsonl");
    require_file(path, "corpus split");
    auto& part = s == Split::kTrain   ? corpus.train
                 : s == Split::kValid ? corpus.valid
                                      : corpus.test;
    part = read_split(path);
  }
  prepare_out(config);
  Manifest manifest("resample", config);
  for (Split s : {Split::kTrain, Split::kValid, Split::kTest}) {
    const std::string name(split_name(s));
    manifest.add_input(name, config.corpus / (name + ".jsonl"));
  }
  const CorpusSplit resampled = resample_prompts(corpus, config.epoch_seed);
  write_corpus(resampled, config.out, &manifest);
  manifest.set("examples", resampled.size());
  manifest.write(config.out);
  log << "resampled " << resampled.train.size()
      << " training prompts with epoch seed " << config.epoch_seed << "\n";
  return manifest.json();
}

nlohmann::json run_extract_commongen(const RunConfig& config,
                                     std::ostream& log) {
  config.validate();
  require_file(config.commongen, "commongen");
  require_graph_inputs(config);
  prepare_out(config);
  Manifest manifest("extract-commongen", config);
  manifest.add_input("graph", config.graph);
  manifest.add_input("embeddings", config.embeddings);
  manifest.add_input("commongen", config.commongen);

  const auto entries = read_commongen(config.commongen);
  const LoadedGraph loaded = load_filtered_graph(config);
  const SimilarityCache cache(loaded.embeddings);
  const TwoWayBuild build = build_two_way(entries, loaded.graph, cache,
                                          config.thresholds, config.workers);

  std::vector<nlohmann::json> rows;
  rows.reserve(build.records.size());
  for (const auto& r : build.records) rows.push_back(record_to_json(r));
  const auto records_path = config.out / "two_way.jsonl";
  write_jsonl(records_path, rows);
  manifest.add_output(records_path);
  const auto stats_path = config.out / "two_way_stats.json";
  write_json(stats_path, build.stats.to_json());
  manifest.add_output(stats_path);

  manifest.set("entries", build.stats.entries);
  manifest.set("pairs", build.stats.pairs);
  manifest.set("records", build.stats.records);
  manifest.set("triplets", build.stats.triplets);
  manifest.write(config.out);

  log << "entries: " << build.stats.entries << " ("
      << build.stats.skipped_entries << " without commonsense, "
      << build.stats.invalid_entries << " invalid)\n"
      << "pairs: " << build.stats.pairs << ", records: " << build.stats.records
      << ", mean triplets: " << build.stats.mean_triplets() << "\n";
  return manifest.json();
}

nlohmann::json run_extract_dialogues(const RunConfig& config,
                                     std::ostream& log) {
  config.validate();
  require_file(config.dialogues, "dialogues");
  require_graph_inputs(config);
  require_file(config.data_dir / "stopwords.txt", "stopwords");
  require_file(config.data_dir / "pos_lexicon.tsv", "pos lexicon");
  prepare_out(config);
  Manifest manifest("extract-dialogues", config);
  manifest.add_input("graph", config.graph);
  manifest.add_input("embeddings", config.embeddings);
  manifest.add_input("dialogues", config.dialogues);
  manifest.add_input("stopwords", config.data_dir / "stopwords.txt");
  manifest.add_input("pos_lexicon", config.data_dir / "pos_lexicon.tsv");

  const auto dialogues = read_dialogues(config.dialogues);
  if (dialogues.empty()) throw EmptyInputError("no dialogues in input");
  KeywordMiner miner = KeywordMiner::load(config.data_dir);
  miner.options.k = config.keywords_k;
  const CorpusStats stats = dialogue_stats(dialogues);

  const LoadedGraph loaded = load_filtered_graph(config);
  const SimilarityCache cache(loaded.embeddings);
  DialogueOptions options;
  options.max_context_turns = config.max_context_turns;
  options.thresholds = config.thresholds;
  options.workers = config.workers;
  const DialogueBuild build =
      build_records(dialogues, loaded.graph, cache, miner, stats, options);

  std::vector<nlohmann::json> rows;
  rows.reserve(build.records.size());
  for (const auto& r : build.records) {
    rows.push_back(dialogue_record_to_json(r, config.max_context_turns));
  }
  const auto records_path = config.out / "dialogue_records.jsonl";
  write_jsonl(records_path, rows);
  manifest.add_output(records_path);
  const auto stats_path = config.out / "dialogue_stats.json";
  write_json(stats_path, build.stats.to_json());
  manifest.add_output(stats_path);

  manifest.set("dialogues", build.stats.dialogues);
  manifest.set("records", build.stats.records);
  manifest.set("records_with_cs", build.stats.records_with_cs);
  manifest.set("chains", build.stats.chains());
  manifest.write(config.out);

  log << "dialogues: " << build.stats.dialogues
      << ", records: " << build.stats.records << " ("
      << build.stats.records_with_cs << " with commonsense)\n"
      << "chains: " << build.stats.chains() << " | context-only "
      << build.stats.context_only_pct() << "%, context-response "
      << build.stats.context_response_pct() << "%, both-sides "
      << build.stats.both_sides_pct() << "%\n";
  return manifest.json();
}

nlohmann::json run_eval_triplets(const RunConfig& config, std::ostream& log) {
  config.validate();
  require_file(config.generations, "generations");
  require_file(config.graph, "graph");
  prepare_out(config);
  Manifest manifest("eval-triplets", config);
  manifest.add_input("generations", config.generations);
  manifest.add_input("graph", config.graph);

  ScoreOptions options;
  options.either_direction = config.either_direction;
  ConceptGraph graph;
  if (config.score_unfiltered) {
    graph = load_assertions(config.graph, config.lang);
    options.graph_label = "unfiltered";
  } else {
    manifest.add_input("embeddings", config.embeddings);
    graph = load_filtered_graph(config).graph;
    options.graph_label = "filtered";
  }

  std::vector<ParsedOutput> parsed;
  for (const std::string& g : read_generations(config.generations)) {
    parsed.push_back(parse_chains(g));
  }
  const AccuracyReport report = score(parsed, graph, options);

  const auto report_path = config.out / "eval_report.json";
  write_json(report_path, report.to_json());
  manifest.add_output(report_path);
  const auto text_path = config.out / "eval_report.txt";
  {
    std::ofstream out(text_path, std::ios::binary);
    out << report.to_text();
    if (!out) throw IngestionError("write error on " + text_path.string());
  }
  manifest.add_output(text_path);
  manifest.set("generations", report.generations);
  manifest.set("triplets", report.total);
  manifest.set("unparsed", report.unparsed);
  manifest.write(config.out);

  log << report.to_text();
  return manifest.json();
}

}  // namespace cskg
