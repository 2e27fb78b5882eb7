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

#include "volrig/geometry.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "volrig/errors.hpp"

namespace volrig {

void Embedding::validate() const {
  if (d < 1) throw ParameterError("embedding dimension must be >= 1");
  for (const Point& pt : points) {
    if (static_cast<int>(pt.size()) != d) {
      throw ParameterError("embedding point has " + std::to_string(pt.size()) +
                           " coordinates, expected " + std::to_string(d));
    }
  }
}

const Rational& SquaredLengths::at(const Edge& e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || *it != e) {
    throw ParameterError("no squared length for edge " + e.to_string());
  }
  return values[it - edges.begin()];
}

Rational squared_distance(const Point& a, const Point& b) {
  if (a.size() != b.size()) throw ParameterError("points of different dimension");
  Rational s = 0;
  Rational diff;
  for (std::size_t i = 0; i < a.size(); ++i) {
    diff = a[i] - b[i];
    s += diff * diff;
  }
  return s;
}

namespace {

void require_covers(const Embedding& p, Vertex v) {
  if (v < 0 || v >= p.size()) {
    throw ParameterError("embedding has no point for vertex " +
                         std::to_string(v));
  }
}

}  // namespace

SquaredLengths squared_edge_lengths(const SimplicialComplex& x,
                                    const Embedding& p) {
  for (const Face& v : x.faces(0)) require_covers(p, v[0]);
  SquaredLengths out;
  out.edges = x.faces(1);
  out.values.reserve(out.edges.size());
  for (const Edge& e : out.edges) {
    out.values.push_back(squared_distance(p[e[0]], p[e[1]]));
  }
  return out;
}

RationalMatrix distance_table(const Embedding& p, const Face& face) {
  const std::size_t m = face.size();
  RationalMatrix t(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    require_covers(p, face[i]);
    for (std::size_t j = i + 1; j < m; ++j) {
      require_covers(p, face[j]);
      t(i, j) = squared_distance(p[face[i]], p[face[j]]);
      t(j, i) = t(i, j);
    }
  }
  return t;
}

RationalMatrix distance_table(const SquaredLengths& lengths, const Face& face) {
  const std::size_t m = face.size();
  RationalMatrix t(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      t(i, j) = lengths.at(Face{face[i], face[j]});
      t(j, i) = t(i, j);
    }
  }
  return t;
}

RationalMatrix cayley_menger_matrix(const RationalMatrix& table) {
  const std::size_t m = table.rows();
  if (table.cols() != m) throw ParameterError("distance table must be square");
  RationalMatrix cm(m + 1, m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) cm(i, j) = i == j ? Rational(0) : table(i, j);
    cm(i, m) = 1;
    cm(m, i) = 1;
  }
  return cm;
}

Rational cm_prefactor(int k) {
  Integer fact = 1;
  for (int i = 2; i <= k; ++i) fact *= i;
  Integer den = fact * fact;
  den <<= k;
  Rational c(k % 2 == 1 ? 1 : -1, 1);
  c /= Rational(den);
  return c;
}

Rational cm_squared_volume(const RationalMatrix& table) {
  const int k = static_cast<int>(table.rows()) - 1;
  if (k < 0) throw ParameterError("empty distance table");
  if (k == 0) return 1;
  return cm_prefactor(k) * determinant(cayley_menger_matrix(table));
}

Rational squared_volume(const Embedding& p, const Face& face) {
  return cm_squared_volume(distance_table(p, face));
}

Point altitude_foot(const Embedding& p, const Face& sigma, Vertex v) {
  if (!sigma.contains(v) || sigma.size() < 2) {
    throw ParameterError("altitude needs a vertex of a face of dimension >= 1");
  }
  const Face base = sigma.without(v);
  for (Vertex u : sigma) require_covers(p, u);
  const Point& q0 = p[base[0]];
  const std::size_t m = base.size() - 1;
  if (m == 0) return q0;

  const std::size_t d = q0.size();
  RationalMatrix w(d, m);
  for (std::size_t j = 0; j < m; ++j) {
    const Point& q = p[base[j + 1]];
    for (std::size_t i = 0; i < d; ++i) w(i, j) = q[i] - q0[i];
  }
  const RationalMatrix gram = matmul(w.transpose(), w);
  if (sgn(determinant(gram)) == 0) {
    throw DegenerateError("altitude base " + base.to_string() +
                          " is affinely dependent");
  }
  std::vector<Rational> rhs(m);
  const Point& apex = p[v];
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < d; ++i) rhs[j] += w(i, j) * (apex[i] - q0[i]);
  }
  const auto lambda = solve_least_structure(gram, rhs);
  Point foot = q0;
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t i = 0; i < d; ++i) foot[i] += (*lambda)[j] * w(i, j);
  }
  return foot;
}

Point altitude_vector(const Embedding& p, const Face& sigma, Vertex v) {
  Point h = p[v];
  const Point foot = altitude_foot(p, sigma, v);
  for (std::size_t i = 0; i < h.size(); ++i) h[i] -= foot[i];
  return h;
}

Embedding regular_simplex_embedding(int d, bool with_centroid) {
  if (d < 1) throw ParameterError("regular simplex needs d >= 1");
  Embedding p;
  p.d = d + 1;
  for (int i = 0; i <= d; ++i) {
    Point pt(d + 1);
    pt[i] = 1;
    p.points.push_back(std::move(pt));
  }
  if (with_centroid) {
    Point c(d + 1);
    for (const Point& pt : p.points) {
      for (int i = 0; i <= d; ++i) c[i] += pt[i];
    }
    for (Rational& x : c) x /= d + 1;
    p.points.push_back(std::move(c));
  }
  return p;
}

RationalMatrix regular_simplex_table(int d, bool with_centroid) {
  const Embedding p = regular_simplex_embedding(d, with_centroid);
  std::vector<Vertex> all(p.size());
  for (int i = 0; i < p.size(); ++i) all[i] = i;
  RationalMatrix t = distance_table(p, Face(all));
  // Normalize so the simplex edges have unit squared length.
  return t.scaled(1 / t(0, 1));
}

Embedding random_rational_embedding(int n, int d, std::uint64_t seed,
                                    int bits) {
  if (n < 1 || d < 1) throw ParameterError("embedding needs n, d >= 1");
  if (bits < 1 || bits > 62) throw ParameterError("bits must be in [1, 62]");
  std::mt19937_64 rng(seed);
  const std::int64_t bound = std::int64_t{1} << bits;
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  Embedding p;
  p.d = d;
  p.points.resize(n);
  for (Point& pt : p.points) {
    pt.reserve(d);
    for (int i = 0; i < d; ++i) {
      pt.emplace_back(static_cast<long>(dist(rng)));
    }
  }
  return p;
}

VolumeQuadratic volume_quadratic(const RationalMatrix& table) {
  const int k = static_cast<int>(table.rows()) - 1;
  if (k < 2 || table.cols() != table.rows()) {
    throw ParameterError("volume quadratic needs a simplex of dimension >= 2");
  }
  if (k >= 3) {
    std::vector<std::size_t> rest;
    for (int i = 2; i <= k; ++i) rest.push_back(i);
    const RationalMatrix sub = table.select_rows(rest).select_cols(rest);
    if (sgn(cm_squared_volume(sub)) <= 0) {
      throw DegenerateError("face opposite edge {0,1} is degenerate");
    }
  }
  auto f = [&](long t) {
    RationalMatrix filled = table;
    filled(0, 1) = t;
    filled(1, 0) = t;
    return cm_squared_volume(filled);
  };
  // f is quadratic in t, so three samples determine it.
  const Rational f0 = f(0);
  const Rational f1 = f(1);
  const Rational f2 = f(2);
  VolumeQuadratic q;
  q.k = k;
  q.a = (f2 - 2 * f1 + f0) / 2;
  q.b = f1 - f0 - q.a;
  q.c = f0;
  return q;
}

nlohmann::json embedding_to_json(const Embedding& p) {
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& pt : p.points) {
    nlohmann::json row = nlohmann::json::array();
    for (const Rational& x : pt) row.push_back(rational_to_string(x));
    pts.push_back(std::move(row));
  }
  return {{"d", p.d}, {"points", pts}};
}

Embedding embedding_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("d") || !doc.contains("points") ||
      !doc["d"].is_number_integer() || !doc["points"].is_array()) {
    throw ParseError("embedding JSON needs integer \"d\" and array \"points\"");
  }
  Embedding p;
  p.d = doc["d"].get<int>();
  for (const auto& row : doc["points"]) {
    if (!row.is_array()) throw ParseError("embedding point must be an array");
    Point pt;
    for (const auto& x : row) {
      if (!x.is_string()) throw ParseError("coordinate must be a \"num/den\" string");
      pt.push_back(rational_from_string(x.get<std::string>()));
    }
    p.points.push_back(std::move(pt));
  }
  try {
    p.validate();
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
  return p;
}

}  // namespace volrig
