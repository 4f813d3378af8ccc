// Copyright 2026 The Taxsan Authors.
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
#ifndef TAXSAN_COMMON_ERRORS_H_
#define TAXSAN_COMMON_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace taxsan {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input record. line() is 1-based, 0 when not line oriented.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A record refers to an id that does not exist.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// The parent graph has a cycle; concept() is one concept on it.
class CycleError : public Error {
 public:
  explicit CycleError(std::string concept_id)
      : Error("cycle in parent graph through concept '" + concept_id + "'"),
        concept_(std::move(concept_id)) {}
  const std::string &concept_id() const { return concept_; }

 private:
  std::string concept_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Input is well formed but semantically invalid (unknown topic, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Two declarations that cannot both hold (duplicate rule, incompatible
// access levels).
class ConflictError : public Error {
 public:
  using Error::Error;
};

// Access level or topic configuration cannot be applied to the knowledge
// base in use.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// Remote knowledge base transport or protocol failure.
class RemoteError : public Error {
 public:
  using Error::Error;
};

}  // namespace taxsan

#endif  // TAXSAN_COMMON_ERRORS_H_
