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

#ifndef VOLRIG_JSON_IO_HPP_
#define VOLRIG_JSON_IO_HPP_

#include <string>

#include <nlohmann/json.hpp>

#include "volrig/complex.hpp"

namespace volrig {

// {"n": int, "dim": int, "facets": [[int,...],...]}. Parsing applies the
// downward closure; throws ParseError on malformed documents and
// ParameterError on out-of-range vertices.
SimplicialComplex complex_from_json(const nlohmann::json& doc);
nlohmann::json complex_to_json(const SimplicialComplex& x);

SimplicialComplex parse_complex(const std::string& text);
std::string dump_complex(const SimplicialComplex& x);

}  // namespace volrig

#endif  // VOLRIG_JSON_IO_HPP_
