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

#include "cskg/embedding_store.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <mutex>

#include "cskg/error.h"
#include "cskg/text.h"

namespace cskg {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

bool parse_double(std::string_view s, double* out) {
  const auto result = std::from_chars(s.data(), s.data() + s.size(), *out);
  return result.ec == std::errc() && result.ptr == s.data() + s.size();
}

bool is_unsigned(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
}

std::string pair_key(std::string_view a, std::string_view b) {
  if (b < a) std::swap(a, b);
  std::string key;
  key.reserve(a.size() + b.size() + 1);
  key.append(a);
  key.push_back('\x1f');
  key.append(b);
  return key;
}

}  // namespace

std::optional<double> cosine(const Eigen::Ref<const Eigen::VectorXd>& a,
                             const Eigen::Ref<const Eigen::VectorXd>& b) {
  const double na = a.norm();
  const double nb = b.norm();
  if (na == 0.0 || nb == 0.0) return std::nullopt;
  return std::clamp(a.dot(b) / (na * nb), -1.0, 1.0);
}

EmbeddingStore EmbeddingStore::from_rows(
    const std::vector<std::pair<std::string, std::vector<double>>>& rows) {
  if (rows.empty()) throw InvalidArgumentError("embedding table is empty");
  const std::size_t dim = rows.front().second.size();
  if (dim == 0) throw InvalidArgumentError("embedding dimension must be > 0");
  EmbeddingStore store;
  store.table_.resize(static_cast<Eigen::Index>(rows.size()),
                      static_cast<Eigen::Index>(dim));
  for (const auto& [token, values] : rows) {
    if (values.size() != dim) {
      throw InvalidArgumentError("inconsistent dimension for token '" + token +
                                 "'");
    }
    const auto row = static_cast<Eigen::Index>(store.tokens_.size());
    if (!store.index_.emplace(token, row).second) {
      throw InvalidArgumentError("duplicate token '" + token + "'");
    }
    store.tokens_.push_back(token);
    store.table_.row(row) =
        Eigen::Map<const Eigen::RowVectorXd>(values.data(), values.size());
  }
  return store;
}

bool EmbeddingStore::contains(std::string_view token) const {
  return index_.find(std::string(token)) != index_.end();
}

std::optional<Eigen::Map<const EmbeddingStore::Vector>>
EmbeddingStore::token_vector(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return Eigen::Map<const Vector>(table_.row(it->second).data(), table_.cols());
}

std::optional<EmbeddingStore::Vector> EmbeddingStore::concept_vector(
    std::string_view concept_surface) const {
  Vector sum = Vector::Zero(table_.cols());
  int known = 0;
  for (std::string_view word : split(concept_surface, ' ')) {
    if (word.empty()) continue;
    if (auto v = token_vector(word)) {
      sum += *v;
      ++known;
    }
  }
  if (known == 0) return std::nullopt;
  return Vector(sum / known);
}

std::optional<double> EmbeddingStore::cosine(std::string_view a,
                                             std::string_view b) const {
  const auto va = concept_vector(a);
  if (!va) return std::nullopt;
  const auto vb = concept_vector(b);
  if (!vb) return std::nullopt;
  return cskg::cosine(*va, *vb);
}

EmbeddingStore load_embeddings(const std::filesystem::path& path,
                               std::optional<std::size_t> vocab_limit,
                               EmbeddingLoadReport* report) {
  std::ifstream in(path);
  if (!in) {
    throw IngestionError("cannot open embedding file " + path.string());
  }
  EmbeddingLoadReport local;
  EmbeddingLoadReport& r = report != nullptr ? *report : local;
  r = EmbeddingLoadReport{};

  std::vector<std::string> tokens;
  std::vector<double> values;
  std::unordered_map<std::string, Eigen::Index> index;
  std::size_t dim = 0;
  std::vector<double> row;
  std::string line;
  while (std::getline(in, line)) {
    if (vocab_limit && tokens.size() >= *vocab_limit) break;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    ++r.lines_read;
    const auto fields = split_fields(line);
    // word2vec text files open with "<count> <dim>".
    if (r.lines_read == 1 && fields.size() == 2 && is_unsigned(fields[0]) &&
        is_unsigned(fields[1])) {
      r.header = true;
      continue;
    }
    if (fields.size() < 2 || (dim != 0 && fields.size() - 1 != dim)) {
      ++r.bad_arity;
      continue;
    }
    row.assign(fields.size() - 1, 0.0);
    bool ok = true;
    for (std::size_t i = 1; i < fields.size() && ok; ++i) {
      ok = parse_double(fields[i], &row[i - 1]);
    }
    if (!ok) {
      ++r.bad_number;
      continue;
    }
    std::string token(fields[0]);
    if (index.count(token) != 0) {
      ++r.duplicates;
      continue;
    }
    if (dim == 0) dim = row.size();
    index.emplace(token, static_cast<Eigen::Index>(tokens.size()));
    tokens.push_back(std::move(token));
    values.insert(values.end(), row.begin(), row.end());
  }
  if (tokens.empty()) {
    throw EmptyInputError("no valid embedding line in " + path.string());
  }
  r.loaded = tokens.size();

  EmbeddingStore store;
  store.table_ = Eigen::Map<const EmbeddingStore::Matrix>(
      values.data(), static_cast<Eigen::Index>(tokens.size()),
      static_cast<Eigen::Index>(dim));
  store.tokens_ = std::move(tokens);
  store.index_ = std::move(index);
  return store;
}

std::optional<double> SimilarityCache::cosine(std::string_view a,
                                              std::string_view b) const {
  std::string key = pair_key(a, b);
  {
    std::shared_lock lock(mutex_);
    const auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  const auto value = store_->cosine(a, b);
  std::unique_lock lock(mutex_);
  memo_.emplace(std::move(key), value);
  return value;
}

std::size_t SimilarityCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

}  // namespace cskg
