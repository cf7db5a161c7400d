// Copyright 2026 The Spreadlab Authors.
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

#ifndef SPREADLAB_CLI_HPP
#define SPREADLAB_CLI_HPP

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace spreadlab::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kOk = 0, kVerdictFail = 1, kInputError = 2, kResourceError = 3 };

struct Budgets {
  std::uint64_t candidates = 0;   // candidate sets for exact certification
  std::uint64_t enumeration = 0;  // subsets for exact containment and oracles
  std::uint64_t pairs = 0;        // (S, W) checks for bad-pair counting
};

// Library defaults, then SPREADLAB_BUDGET_{CANDIDATES,ENUM,PAIRS}.
Budgets budgets_from_environment();

// Splits "a=1,b=2,3" into {a: "1", b: "2,3"}: a token without '=' extends the
// previous value. Throws InputError on an empty key or a leading bare token.
std::map<std::string, std::string> parse_key_values(const std::string& text);

// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spreadlab::cli

#endif  // SPREADLAB_CLI_HPP
