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

#ifndef VOLRIG_GEOMETRY_HPP_
#define VOLRIG_GEOMETRY_HPP_

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "volrig/complex.hpp"
#include "volrig/exact_linalg.hpp"

namespace volrig {

using Point = std::vector<Rational>;

// Vertex-indexed points with rational coordinates in R^d.
struct Embedding {
  int d = 0;
  std::vector<Point> points;

  int size() const { return static_cast<int>(points.size()); }
  const Point& operator[](Vertex v) const { return points.at(v); }
  // Throws ParameterError if a point has the wrong arity.
  void validate() const;
};

// Squared lengths indexed by edge; `edges` is sorted.
struct SquaredLengths {
  std::vector<Edge> edges;
  std::vector<Rational> values;

  // Throws ParameterError for an edge that is not present.
  const Rational& at(const Edge& e) const;
};

Rational squared_distance(const Point& a, const Point& b);

// Throws ParameterError when p does not cover a vertex of X_0.
SquaredLengths squared_edge_lengths(const SimplicialComplex& x,
                                    const Embedding& p);

// Symmetric table of squared distances between the vertices of `face`,
// in face order.
RationalMatrix distance_table(const Embedding& p, const Face& face);
RationalMatrix distance_table(const SquaredLengths& lengths, const Face& face);

// Bordered Cayley-Menger matrix of a (k+1)x(k+1) squared-distance table.
RationalMatrix cayley_menger_matrix(const RationalMatrix& table);

// (-1)^{k+1} / ((k!)^2 2^k).
Rational cm_prefactor(int k);

// Squared k-volume of a simplex from its squared-distance table. Degenerate
// tables give values <= 0; no error is raised.
Rational cm_squared_volume(const RationalMatrix& table);

Rational squared_volume(const Embedding& p, const Face& face);

// Orthogonal projection of p(v) onto the affine span of p(sigma \ {v}).
// Throws DegenerateError if that base is affinely dependent.
Point altitude_foot(const Embedding& p, const Face& sigma, Vertex v);

// p(v) minus its foot on the opposite face.
Point altitude_vector(const Embedding& p, const Face& sigma, Vertex v);

// Vertices e_1..e_{d+1} of the standard simplex in R^{d+1} (a regular
// d-simplex with squared edge 2), optionally followed by its centroid.
Embedding regular_simplex_embedding(int d, bool with_centroid);

// Squared-distance table of the regular d-simplex normalized to unit squared
// edge, derived from regular_simplex_embedding. With `with_centroid` the
// centroid is appended as the last point.
RationalMatrix regular_simplex_table(int d, bool with_centroid);

// n points in Q^d with independent uniform integer coordinates in
// [-2^bits, 2^bits]. Deterministic in `seed`.
Embedding random_rational_embedding(int n, int d, std::uint64_t seed,
                                    int bits = 20);

// Squared k-volume as a function of t = squared length of edge {0,1} with
// every other squared length fixed: f(t) = a t^2 + b t + c.
struct VolumeQuadratic {
  Rational a;
  Rational b;
  Rational c;
  int k = 0;

  Rational operator()(const Rational& t) const { return (a * t + b) * t + c; }
  Rational derivative(const Rational& t) const { return 2 * a * t + b; }
  // -b / 2a.
  Rational critical_point() const { return -b / (2 * a); }
};

// `table` is a (k+1)x(k+1) squared-distance table whose (0,1) entry is
// ignored. Requires k >= 2 and a nondegenerate face on {2..k}; throws
// DegenerateError otherwise.
VolumeQuadratic volume_quadratic(const RationalMatrix& table);

nlohmann::json embedding_to_json(const Embedding& p);
Embedding embedding_from_json(const nlohmann::json& doc);

}  // namespace volrig

#endif  // VOLRIG_GEOMETRY_HPP_
