// Copyright 2026 The trop Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace trop {

/// An operation was applied outside its algebraic domain (inverting the zero
/// element, conjugating the zero vector, evaluating at a non-regular vector).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Operand dimensions do not fit the operation.
class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A configured enumeration limit would be exceeded.
class ResourceError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Malformed matrix or scalar text. `line()` is 1-based; 0 means "not tied to
/// a line" (e.g. a bare token).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// One or more preconditions of a closed-form result failed. Each violated
/// hypothesis is listed separately in `violations()`.
class HypothesisError : public std::runtime_error {
 public:
  explicit HypothesisError(std::vector<std::string> violations)
      : std::runtime_error(join(violations)), violations_(std::move(violations)) {}

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) {
      if (!out.empty()) out += "; ";
      out += item;
    }
    return out;
  }

  std::vector<std::string> violations_;
};

}  // namespace trop
