// Copyright 2026 The Skolem Toolkit Authors
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

#ifndef SKOLEM_ERROR_HPP_
#define SKOLEM_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace skolem {

// Base of every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed formula text; carries 1-based line and column.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t line, std::size_t column);
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// A precondition on an argument was violated (non-prime key, empty set,
// unassigned variable, nested counting atom, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A configurable size cap was exceeded.
class ResourceError : public Error {
 public:
  using Error::Error;
};

}  // namespace skolem

#endif  // SKOLEM_ERROR_HPP_
