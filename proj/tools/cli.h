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

#ifndef DIVSEL_TOOLS_CLI_H_
#define DIVSEL_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace divsel::cli {

// Process exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitBudget = 4;

// Runs the divsel command line. `args` excludes the program name. Documents
// go to `out` unless --output names a file; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace divsel::cli

#endif  // DIVSEL_TOOLS_CLI_H_
