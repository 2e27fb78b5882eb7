// Copyright 2026 The Authors.
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

#include <algorithm>
#include <vector>

#include "volrig/errors.hpp"
#include "volrig/json_io.hpp"

namespace volrig {

SimplicialComplex complex_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("facets")) {
    throw ParseError("complex JSON needs fields \"n\" and \"facets\"");
  }
  if (!doc["n"].is_number_integer() || !doc["facets"].is_array()) {
    throw ParseError("complex JSON: \"n\" must be an integer and \"facets\" an array");
  }
  const int n = doc["n"].get<int>();
  std::vector<Face> facets;
  for (const auto& f : doc["facets"]) {
    if (!f.is_array()) throw ParseError("facet must be an array of vertices");
    std::vector<Vertex> vs;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw ParseError("vertex must be an integer");
      vs.push_back(v.get<Vertex>());
    }
    if (vs.empty()) throw ParseError("empty facet");
    if (!std::is_sorted(vs.begin(), vs.end())) {
      throw ParseError("facet vertices must be sorted");
    }
    try {
      facets.emplace_back(std::move(vs));
    } catch (const ParameterError& e) {
      throw ParseError(e.what());
    }
  }
  SimplicialComplex x;
  try {
    x = from_facets(n, facets);
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  if (doc.contains("dim")) {
    if (!doc["dim"].is_number_integer()) throw ParseError("\"dim\" must be an integer");
    if (doc["dim"].get<int>() != x.dim()) {
      throw ParseError("\"dim\" does not match the largest facet");
    }
  }
  return x;
}

nlohmann::json complex_to_json(const SimplicialComplex& x) {
  nlohmann::json facets = nlohmann::json::array();
  for (const Face& f : x.facets()) facets.push_back(f.vertices());
  return {{"n", x.n_vertices()}, {"dim", x.dim()}, {"facets", facets}};
}

SimplicialComplex parse_complex(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return complex_from_json(doc);
}

std::string dump_complex(const SimplicialComplex& x) {
  return complex_to_json(x).dump();
}

}  // namespace volrig
