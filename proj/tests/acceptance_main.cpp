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

#include <iostream>
#include <string>

#include "spreadlab/acceptance.hpp"
#include "spreadlab/errors.hpp"

// Prints one PASS/FAIL line per criterion; exit status 1 if any fails.
int main(int argc, char** argv) {
  using namespace spreadlab::acceptance;
  Profile profile = Profile::quick;
  try {
    if (argc > 1) profile = parse_profile(argv[1]);
  } catch (const spreadlab::InputError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
  const Report report = run(profile, [](const CriterionResult& r) { std::cout << format_line(r) << std::endl; });
  std::cout << (report.all_passed() ? "ALL PASS" : "SOME FAILED") << " (" << to_string(profile) << " profile, "
            << report.seconds << " s)" << std::endl;
  return report.all_passed() ? 0 : 1;
}
