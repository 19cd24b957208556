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

#include "divsel/errors.h"

#include <string>

namespace divsel {
namespace {

std::string FormatLocation(const std::string& source, std::size_t line,
                           const std::string& what) {
  std::string out = source;
  if (line > 0) out += ":" + std::to_string(line);
  if (!out.empty()) out += ": ";
  return out + what;
}

}  // namespace

ParseError::ParseError(std::string source, std::size_t line,
                       const std::string& what)
    : Error(FormatLocation(source, line, what)),
      source_(std::move(source)),
      line_(line) {}

BudgetExceededError::BudgetExceededError(unsigned long long required,
                                         unsigned long long budget)
    : Error("exhaustive search needs " + std::to_string(required) +
            " subsets, over the enumeration budget of " +
            std::to_string(budget)),
      required_(required),
      budget_(budget) {}

}  // namespace divsel
