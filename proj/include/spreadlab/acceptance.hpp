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

#ifndef SPREADLAB_ACCEPTANCE_HPP
#define SPREADLAB_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

#include "spreadlab/io.hpp"

namespace spreadlab::acceptance {

enum class Profile { quick, full };
const char* to_string(Profile p);
// Throws InputError on anything but "quick" or "full".
Profile parse_profile(const std::string& text);

struct CriterionResult {
  unsigned id = 0;
  std::string name;
  bool passed = false;
  bool vacuous = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no runtime limit
};

struct Report {
  Profile profile = Profile::quick;
  std::vector<CriterionResult> criteria;
  double seconds = 0;

  bool all_passed() const;
};

// Runs the ten acceptance criteria in order. `on_result` sees each result as
// soon as it is available.
Report run(Profile profile, const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS [3] name: detail (1.2 s)"
std::string format_line(const CriterionResult& r);

json to_json(const CriterionResult& r);
json to_json(const Report& r);

}  // namespace spreadlab::acceptance

#endif  // SPREADLAB_ACCEPTANCE_HPP
