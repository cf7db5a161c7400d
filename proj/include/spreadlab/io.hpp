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

#ifndef SPREADLAB_IO_HPP
#define SPREADLAB_IO_HPP

#include <filesystem>
#include <string>

#include <json.hpp>

#include "spreadlab/hypergraph.hpp"
#include "spreadlab/rational.hpp"
#include "spreadlab/spread.hpp"

namespace spreadlab {

using json = nlohmann::json;

// Interchange format: {"n": int, "name": string (optional), "edges": [[int, ...], ...]}
// with every inner list strictly increasing and inside [0, n).
json to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const json& j);

// One-line canonical text (sorted keys) plus a trailing newline; parsing and
// re-serializing reproduces it byte for byte.
std::string serialize(const Hypergraph& h);
Hypergraph parse_hypergraph(const std::string& text);

Hypergraph read_hypergraph(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

// Rationals always travel as {"num": "...", "den": "..."}.
json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const RadicalRational& r);
json to_json(const VertexSet& s);
json to_json(const Witness& w);
json to_json(const CertResult& r);
json to_json(const MinSpread& m);

}  // namespace spreadlab

#endif  // SPREADLAB_IO_HPP
