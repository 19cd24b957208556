// Copyright 2026 The divsel Authors.
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

#ifndef DIVSEL_ERRORS_H_
#define DIVSEL_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace divsel {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the source and the 1-based line number
// (0 when the error is not tied to a line).
class ParseError : public Error {
 public:
  ParseError(std::string source, std::size_t line, const std::string& what);

  const std::string& source() const { return source_; }
  std::size_t line() const { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

// Well-formed input that violates a dataset invariant (label arity,
// duplicate names, no features left, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A precondition on an operation's arguments does not hold.
class DomainError : public Error {
 public:
  using Error::Error;
};

// The exhaustive oracle refused an instance that exceeds its budget.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(unsigned long long required, unsigned long long budget);

  unsigned long long required() const { return required_; }
  unsigned long long budget() const { return budget_; }

 private:
  unsigned long long required_;
  unsigned long long budget_;
};

}  // namespace divsel

#endif  // DIVSEL_ERRORS_H_
