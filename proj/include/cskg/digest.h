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

#ifndef CSKG_DIGEST_H_
#define CSKG_DIGEST_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace cskg {

using Sha256 = std::array<std::uint8_t, 32>;

Sha256 sha256(std::string_view data);

// Throws IngestionError when the file cannot be read.
Sha256 sha256_file(const std::filesystem::path& path);

std::string to_hex(const Sha256& digest);

// First eight digest bytes as a big-endian integer.
std::uint64_t prefix64(const Sha256& digest);

}  // namespace cskg

#endif  // CSKG_DIGEST_H_
