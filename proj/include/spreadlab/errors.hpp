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

#ifndef SPREADLAB_ERRORS_HPP
#define SPREADLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spreadlab {

// Malformed or out-of-domain input. The CLI maps this to exit status 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's structural precondition does not hold (e.g. a hypergraph
// that is not r_1-bounded handed to tiered certification). Kept distinct from
// a certification failure, which is a verdict and not an error.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// Enumeration would exceed the configured budget. Exit status 3.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace spreadlab

#endif  // SPREADLAB_ERRORS_HPP
