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

#ifndef VOLRIG_RIGIDITY_MATRICES_HPP_
#define VOLRIG_RIGIDITY_MATRICES_HPP_

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "volrig/complex.hpp"
#include "volrig/exact_linalg.hpp"
#include "volrig/geometry.hpp"

namespace volrig {

// Row or column label. With coord >= 0 it names coordinate `coord` of the
// block owned by `face` (a vertex for B and R, a (k-1)-face for L and D).
struct Label {
  Face face;
  int coord = -1;

  std::string to_string() const;
  friend bool operator==(const Label&, const Label&) = default;
};

struct IndexedMatrix {
  RationalMatrix matrix;
  std::vector<Label> row_labels;
  std::vector<Label> col_labels;

  // Label counts match the matrix shape and labels are duplicate-free.
  bool consistent() const;
  nlohmann::json to_json() const;
};

// (v, c) for v in 0..n-1, c in 0..d-1: vertex-major, coordinate-minor.
std::vector<Label> vertex_coordinate_labels(int n, int d);

// Jacobian of the squared edge-length map: |E| x d n.
IndexedMatrix build_R(const Graph& g, const Embedding& p);

// Jacobian of squared k-volumes with respect to squared edge lengths:
// |X_k| x |X_1|. Entry (sigma, e) is twice the matching adjugate entry of the
// bordered Cayley-Menger matrix times the Cayley-Menger prefactor.
// Requires dim >= 1 and every edge to lie in some k-face.
IndexedMatrix build_C(const SimplicialComplex& x, const SquaredLengths& lengths);

// C(X, f(p)) * R(G, p) with G the 1-skeleton: |X_k| x d n.
IndexedMatrix build_B(const SimplicialComplex& x, const Embedding& p);

// B assembled simplex by simplex from the gradient of the Gram determinant,
// without going through C or R.
IndexedMatrix build_B_gram(const SimplicialComplex& x, const Embedding& p);

struct LeeFactors {
  IndexedMatrix l;  // |X_k| x d|X_{k-1}|, altitude vectors
  IndexedMatrix d;  // d|X_{k-1}| diagonal, vol_{k-1}^2 repeated d times
  IndexedMatrix p;  // d|X_{k-1}| x d n, identity blocks where v in tau
};

// Throws DegenerateError when some (k-1)-face of a k-face is degenerate.
LeeFactors build_L_D_P(const SimplicialComplex& x, const Embedding& p);

// -2/k^2, the scalar relating B to L D P. The form -2/(k!)^2 agrees only
// for k <= 2.
Rational lee_scalar(int k);

// Central finite differences of the squared k-volumes in long double,
// compared entrywise against build_B. The deviation of an entry is measured
// relative to the largest magnitude in its row. The step is scaled by
// max(1, |x|) for each perturbed coordinate x.
double fd_jacobian_check(const SimplicialComplex& x, const Embedding& p,
                         double step = 1e-6);

}  // namespace volrig

#endif  // VOLRIG_RIGIDITY_MATRICES_HPP_
