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

#ifndef CSKG_ERROR_H_
#define CSKG_ERROR_H_

#include <stdexcept>
#include <string>

namespace cskg {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input file could not be opened or read.
class IngestionError : public Error {
 public:
  using Error::Error;
};

// Loading finished but produced nothing usable.
class EmptyInputError : public Error {
 public:
  using Error::Error;
};

// A caller passed an argument outside the documented domain.
class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

}  // namespace cskg

#endif  // CSKG_ERROR_H_
