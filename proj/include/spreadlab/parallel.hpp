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

#ifndef SPREADLAB_PARALLEL_HPP
#define SPREADLAB_PARALLEL_HPP

namespace spreadlab {

// Caps the worker count used by every OpenMP kernel. jobs <= 0 restores the
// default (all available processors).
void set_jobs(int jobs);
int jobs();
int available_processors();

}  // namespace spreadlab

#endif  // SPREADLAB_PARALLEL_HPP
