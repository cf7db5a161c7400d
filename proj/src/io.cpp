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

#include "spreadlab/io.hpp"

#include <fstream>
#include <sstream>

#include "spreadlab/errors.hpp"

namespace spreadlab {

json to_json(const Hypergraph& h) {
  json j;
  j["n"] = h.num_vertices();
  if (!h.name().empty()) j["name"] = h.name();
  json edges = json::array();
  for (const auto& e : h.edges()) edges.push_back(e.vector());
  j["edges"] = std::move(edges);
  return j;
}

Hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object()) throw InputError("hypergraph JSON must be an object");
  if (!j.contains("n") || !j["n"].is_number_integer() || j["n"].get<long long>() < 0) {
    throw InputError("hypergraph JSON needs a nonnegative integer field 'n'");
  }
  if (!j.contains("edges") || !j["edges"].is_array()) throw InputError("hypergraph JSON needs an 'edges' array");
  const auto n = j["n"].get<std::size_t>();
  std::vector<VertexSet> edges;
  edges.reserve(j["edges"].size());
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw InputError("each edge must be an array of labels");
    std::vector<Vertex> labels;
    labels.reserve(e.size());
    for (const auto& v : e) {
      if (!v.is_number_integer() || v.get<long long>() < 0) throw InputError("labels must be nonnegative integers");
      const auto label = v.get<unsigned long long>();
      if (label >= n) {
        throw InputError("label " + std::to_string(label) + " outside [0, " + std::to_string(n) + ")");
      }
      labels.push_back(static_cast<Vertex>(label));
    }
    edges.push_back(VertexSet::from_sorted(std::move(labels)));
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw InputError("'name' must be a string");
    name = j["name"].get<std::string>();
  }
  return Hypergraph(n, std::move(edges), std::move(name));
}

std::string serialize(const Hypergraph& h) { return to_json(h).dump() + "\n"; }

Hypergraph parse_hypergraph(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  return hypergraph_from_json(j);
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

Hypergraph read_hypergraph(const std::filesystem::path& path) { return parse_hypergraph(read_text(path)); }

json to_json(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw InputError("rational must be {num, den}");
  return parse_rational(j["num"].get<std::string>() + "/" + j["den"].get<std::string>());
}

json to_json(const RadicalRational& r) {
  return json{{"coef", to_json(r.coef)}, {"radicand", to_json(r.radicand)}, {"approx", r.to_double()}};
}

json to_json(const VertexSet& s) { return s.vector(); }

json to_json(const Witness& w) {
  return json{{"A", to_json(w.set)}, {"j", w.j}, {"level", w.level}, {"lhs", w.lhs}, {"rhs", to_json(w.rhs)}};
}

json to_json(const CertResult& r) {
  json j{{"verdict", to_string(r.verdict)}, {"sets_checked", r.sets_checked}};
  if (r.samples) j["samples"] = r.samples;
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

json to_json(const MinSpread& m) {
  json j{{"count", m.q.count}, {"total", m.q.total}, {"exponent", m.q.exponent}, {"approx", m.q.value()}};
  if (auto e = m.q.exact()) j["exact"] = to_json(*e);
  if (m.witness) {
    j["witness"] = json{{"A", to_json(*m.witness)}, {"j", m.j}, {"level", m.level}};
  }
  return j;
}

}  // namespace spreadlab
