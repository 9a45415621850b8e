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

// Helpers shared by the test binaries.

#ifndef CSKG_TESTS_TEST_UTIL_H_
#define CSKG_TESTS_TEST_UTIL_H_

#include <unistd.h>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "cskg/embedding_store.h"
#include "cskg/kg_store.h"
#include "cskg/relation.h"

namespace cskg::testing {

inline std::filesystem::path fixture(const std::string& name) {
  return std::filesystem::path(CSKG_FIXTURE_DIR) / name;
}

inline std::filesystem::path data_dir() { return CSKG_TEST_DATA_DIR; }

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& path,
                       const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
}

// Fresh directory under the system temp dir, removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("cskg-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

struct Edge {
  std::string head;
  Relation relation;
  std::string tail;
  double weight = 1.0;
  std::optional<double> sim;
};

inline ConceptGraph make_graph(const std::vector<Edge>& edges) {
  ConceptGraph::Builder b;
  for (const Edge& e : edges)
    b.add(e.head, e.relation, e.tail, e.weight, e.sim);
  return std::move(b).build();
}

using Rows = std::vector<std::pair<std::string, std::vector<double>>>;

inline EmbeddingStore make_store(const Rows& rows) {
  return EmbeddingStore::from_rows(rows);
}

}  // namespace cskg::testing

#endif  // CSKG_TESTS_TEST_UTIL_H_
