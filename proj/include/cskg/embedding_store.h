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

#ifndef CSKG_EMBEDDING_STORE_H_
#define CSKG_EMBEDDING_STORE_H_

#include <Eigen/Dense>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cskg {

struct EmbeddingLoadReport {
  std::size_t lines_read = 0;
  std::size_t loaded = 0;
  std::size_t bad_arity = 0;   // wrong number of components
  std::size_t bad_number = 0;  // a component failed to parse
  std::size_t duplicates = 0;  // token already present; first one wins
  bool header = false;         // a word2vec "<count> <dim>" line was skipped
};

// Word vectors in a dense row-major matrix, one row per token.
class EmbeddingStore {
 public:
  using Vector = Eigen::VectorXd;
  using Matrix =
      Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  EmbeddingStore() = default;

  // Builds a store from in-memory rows. Throws InvalidArgumentError on a
  // dimension mismatch, a duplicate token, or an empty table.
  static EmbeddingStore from_rows(
      const std::vector<std::pair<std::string, std::vector<double>>>& rows);

  std::size_t dim() const { return static_cast<std::size_t>(table_.cols()); }
  std::size_t size() const { return tokens_.size(); }
  bool contains(std::string_view token) const;

  // Row for a single token, or nullopt.
  std::optional<Eigen::Map<const Vector>> token_vector(
      std::string_view token) const;

  // Single-word concept: the word's vector. Multi-word concept: mean of the
  // vectors of its known words. Absent when no word is known.
  std::optional<Vector> concept_vector(std::string_view concept_surface) const;

  // Cosine of the two concept vectors, clamped to [-1, 1]. Absent when
  // either vector is absent or has zero norm.
  std::optional<double> cosine(std::string_view a, std::string_view b) const;

  const std::vector<std::string>& tokens() const { return tokens_; }

 private:
  friend EmbeddingStore load_embeddings(const std::filesystem::path&,
                                        std::optional<std::size_t>,
                                        EmbeddingLoadReport*);

  Matrix table_;
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, Eigen::Index> index_;
};

// Reads a whitespace-separated text vector file (`token v1 ... vd`). The
// dimension is fixed by the first line; later lines with another arity are
// skipped and counted. Throws IngestionError when the file cannot be read
// and EmptyInputError when no line is usable.
EmbeddingStore load_embeddings(const std::filesystem::path& path,
                               std::optional<std::size_t> vocab_limit = {},
                               EmbeddingLoadReport* report = nullptr);

// Cosine of two vectors; nullopt when either has zero norm.
std::optional<double> cosine(const Eigen::Ref<const Eigen::VectorXd>& a,
                             const Eigen::Ref<const Eigen::VectorXd>& b);

// Memoizes concept cosines per unordered pair. Safe for concurrent use:
// concurrent inserts of the same key store identical values.
class SimilarityCache {
 public:
  explicit SimilarityCache(const EmbeddingStore& store) : store_(&store) {}

  SimilarityCache(const SimilarityCache&) = delete;
  SimilarityCache& operator=(const SimilarityCache&) = delete;

  std::optional<double> cosine(std::string_view a, std::string_view b) const;

  const EmbeddingStore& store() const { return *store_; }
  std::size_t size() const;

 private:
  const EmbeddingStore* store_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<std::string, std::optional<double>> memo_;
};

}  // namespace cskg

#endif  // CSKG_EMBEDDING_STORE_H_
