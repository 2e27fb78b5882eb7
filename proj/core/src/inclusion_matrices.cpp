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

#include "volrig/inclusion_matrices.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "volrig/errors.hpp"

namespace volrig {

IndexedMatrix inclusion_matrix(int n, int s, int t) {
  if (!(0 < t && t <= s && s <= n)) {
    throw ParameterError("inclusion matrix needs 0 < t <= s <= n");
  }
  const std::vector<Face> rows = subsets(n, s);
  const std::vector<Face> cols = subsets(n, t);
  IndexedMatrix a;
  a.matrix = RationalMatrix(rows.size(), cols.size());
  for (const Face& f : rows) a.row_labels.push_back({f, -1});
  for (const Face& f : cols) a.col_labels.push_back({f, -1});
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].is_subset_of(rows[i])) a.matrix(i, j) = 1;
    }
  }
  return a;
}

long inclusion_rank(int n, int s, int t) {
  return static_cast<long>(rank_exact(inclusion_matrix(n, s, t).matrix));
}

nlohmann::json ScalingReduction::to_json() const {
  return {{"d", d},
          {"k", k},
          {"seed", seed},
          {"centroid_vertex", centroid},
          {"alpha", rational_to_string(alpha)},
          {"beta", rational_to_string(beta)},
          {"gamma", gamma_present ? rational_to_string(gamma) : "absent"},
          {"orbits_consistent", orbits_consistent},
          {"values_nonzero", values_nonzero},
          {"matches_inclusion", matches_inclusion},
          {"special_rank_b", special_rank_b},
          {"expected_rank_b", expected_rank_b},
          {"pass", pass()}};
}

ScalingReduction scaled_C_reduction_check(int d, std::uint64_t seed) {
  if (d < 2) throw ParameterError("scaling reduction needs d >= 2");
  ScalingReduction out;
  out.d = d;
  out.k = d - 1;
  out.seed = seed;
  const int n = d + 2;

  // Point d+1 of the base configuration is the centroid.
  const Embedding base = regular_simplex_embedding(d, true);
  std::vector<int> point_of(n);
  if (seed == 0) {
    point_of[0] = d + 1;
    for (int v = 1; v < n; ++v) point_of[v] = v - 1;
  } else {
    std::iota(point_of.begin(), point_of.end(), 0);
    std::mt19937_64 rng(seed);
    std::shuffle(point_of.begin(), point_of.end(), rng);
  }
  Embedding p;
  p.d = base.d;
  for (int v = 0; v < n; ++v) {
    p.points.push_back(base.points[point_of[v]]);
    if (point_of[v] == d + 1) out.centroid = v;
  }

  const SimplicialComplex x = complete_complex(n, out.k);
  SquaredLengths lengths = squared_edge_lengths(x, p);
  // Unit squared edge on the regular simplex.
  const Rational unit = 1 / squared_distance(base.points[0], base.points[1]);
  for (Rational& v : lengths.values) v *= unit;
  const IndexedMatrix c = build_C(x, lengths);

  const std::vector<Face>& tops = x.faces(out.k);
  const std::vector<Edge>& edges = x.faces(1);
  const Vertex cv = out.centroid;
  enum Orbit { kZero, kAlpha, kBeta, kGamma };
  auto orbit = [&](const Face& t, const Edge& e) {
    if (!e.is_subset_of(t)) return kZero;
    if (!t.contains(cv)) return kAlpha;
    if (e.contains(cv)) return kBeta;
    return kGamma;
  };

  bool have[4] = {true, false, false, false};
  Rational value[4];
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      const Orbit o = orbit(tops[i], edges[j]);
      if (!have[o]) {
        have[o] = true;
        value[o] = c.matrix(i, j);
      }
    }
  }
  out.alpha = value[kAlpha];
  out.beta = value[kBeta];
  out.gamma_present = have[kGamma];
  out.gamma = have[kGamma] ? value[kGamma] : value[kBeta];

  out.orbits_consistent = have[kAlpha] && have[kBeta];
  for (std::size_t i = 0; i < tops.size(); ++i) {
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (c.matrix(i, j) != value[orbit(tops[i], edges[j])]) {
        out.orbits_consistent = false;
      }
    }
  }
  if (!out.orbits_consistent) {
    throw std::logic_error("C does not follow the three-orbit pattern at d=" +
                           std::to_string(d));
  }
  out.values_nonzero = sgn(out.alpha) != 0 && sgn(out.beta) != 0 && sgn(out.gamma) != 0;

  if (out.values_nonzero) {
    RationalMatrix scaled = c.matrix;
    for (std::size_t i = 0; i < tops.size(); ++i) {
      const Rational row_factor =
          tops[i].contains(cv) ? Rational(1 / out.gamma) : Rational(1 / out.alpha);
      for (std::size_t j = 0; j < edges.size(); ++j) scaled(i, j) *= row_factor;
    }
    const Rational col_factor = out.gamma / out.beta;
    for (std::size_t j = 0; j < edges.size(); ++j) {
      if (!edges[j].contains(cv)) continue;
      for (std::size_t i = 0; i < tops.size(); ++i) scaled(i, j) *= col_factor;
    }
    out.matches_inclusion = scaled == inclusion_matrix(n, out.k + 1, 2).matrix;
  }

  // The configuration spans a d-flat of R^{d+1}; B's rows lie in that flat's
  // direction space, so the rank equals the rank of the same configuration
  // placed in R^d.
  out.special_rank_b = static_cast<long>(rank_exact(build_B(x, p).matrix));
  out.expected_rank_b = static_cast<long>(d) * n - binomial(d + 1, 2);
  return out;
}

}  // namespace volrig
