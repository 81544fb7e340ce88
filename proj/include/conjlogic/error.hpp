// Copyright 2026 The conjlogic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace conjlogic {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " systems, got " + std::to_string(actual)),
        expected_(expected),
        actual_(actual) {}

  std::size_t expected() const { return expected_; }
  std::size_t actual() const { return actual_; }

 private:
  std::size_t expected_;
  std::size_t actual_;
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class InvalidGate : public Error {
 public:
  using Error::Error;
};

/// Raised for operations that need a non-identity string.
class TrivialProposition : public Error {
 public:
  using Error::Error;
};

/// A conjunction that would contain both p and its negation.
class Contradiction : public Error {
 public:
  using Error::Error;
};

/// Two propositions that cannot hold truth values simultaneously. Indices are
/// 1-based positions in the caller's list when known, 0 otherwise.
class IncompatiblePair : public Error {
 public:
  IncompatiblePair(const std::string &what, std::size_t first, std::size_t second)
      : Error(what), first_(first), second_(second) {}

  std::size_t first() const { return first_; }
  std::size_t second() const { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

class DependentSet : public Error {
 public:
  DependentSet(const std::string &what, std::size_t index) : Error(what), index_(index) {}

  /// 1-based index of the first proposition found to be dependent on earlier ones.
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

/// Text that does not match one of the DSL grammars. `position` is a byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string &what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace conjlogic
