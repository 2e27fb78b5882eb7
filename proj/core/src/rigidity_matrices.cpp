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

#include "volrig/rigidity_matrices.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "volrig/errors.hpp"

namespace volrig {

std::string Label::to_string() const {
  if (coord < 0) return face.to_string();
  return face.to_string() + "." + std::to_string(coord);
}

bool IndexedMatrix::consistent() const {
  if (row_labels.size() != matrix.rows() || col_labels.size() != matrix.cols()) {
    return false;
  }
  auto unique = [](const std::vector<Label>& labels) {
    std::set<std::pair<Face, int>> seen;
    for (const Label& l : labels) {
      if (!seen.emplace(l.face, l.coord).second) return false;
    }
    return true;
  };
  return unique(row_labels) && unique(col_labels);
}

nlohmann::json IndexedMatrix::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  nlohmann::json cols = nlohmann::json::array();
  for (const Label& l : row_labels) rows.push_back(l.to_string());
  for (const Label& l : col_labels) cols.push_back(l.to_string());
  return {{"rows", matrix.rows()},
          {"cols", matrix.cols()},
          {"row_labels", rows},
          {"col_labels", cols},
          {"entries", matrix_to_json(matrix)}};
}

std::vector<Label> vertex_coordinate_labels(int n, int d) {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(n) * d);
  for (Vertex v = 0; v < n; ++v) {
    for (int c = 0; c < d; ++c) out.push_back({Face{v}, c});
  }
  return out;
}

namespace {

void require_points(const Embedding& p, int n) {
  if (p.size() < n) {
    throw ParameterError("embedding covers " + std::to_string(p.size()) +
                         " vertices, need " + std::to_string(n));
  }
}

Integer factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// Cofactor matrix entry (-1)^{i+j} det(M without row i, column j).
Rational cofactor(const RationalMatrix& m, std::size_t i, std::size_t j) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t r = 0; r < n; ++r) {
    if (r != i) rows.push_back(r);
    if (r != j) cols.push_back(r);
  }
  Rational det = determinant(m.select_rows(rows).select_cols(cols));
  if ((i + j) % 2 == 1) det = -det;
  return det;
}

void require_matrix_ready(const SimplicialComplex& x) {
  if (x.dim() < 1) throw ParameterError("matrix builders need dim >= 1");
  const int k = x.dim();
  for (const Edge& e : x.faces(1)) {
    bool covered = false;
    for (const Face& top : x.faces(k)) {
      if (e.is_subset_of(top)) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      throw ParameterError("complex is not pure: edge " + e.to_string() +
                           " lies in no top-dimensional face");
    }
  }
}

std::vector<Label> face_labels(const std::vector<Face>& faces) {
  std::vector<Label> out;
  out.reserve(faces.size());
  for (const Face& f : faces) out.push_back({f, -1});
  return out;
}

}  // namespace

IndexedMatrix build_R(const Graph& g, const Embedding& p) {
  require_points(p, g.n_vertices);
  const int d = p.d;
  IndexedMatrix r;
  r.matrix = RationalMatrix(g.edges.size(), static_cast<std::size_t>(d) * g.n_vertices);
  r.row_labels = face_labels(g.edges);
  r.col_labels = vertex_coordinate_labels(g.n_vertices, d);
  for (std::size_t row = 0; row < g.edges.size(); ++row) {
    const Vertex u = g.edges[row][0];
    const Vertex v = g.edges[row][1];
    for (int c = 0; c < d; ++c) {
      const Rational diff = p[u][c] - p[v][c];
      r.matrix(row, u * d + c) = 2 * diff;
      r.matrix(row, v * d + c) = -2 * diff;
    }
  }
  return r;
}

IndexedMatrix build_C(const SimplicialComplex& x, const SquaredLengths& lengths) {
  require_matrix_ready(x);
  const int k = x.dim();
  const std::vector<Face>& tops = x.faces(k);
  const std::vector<Edge>& edges = x.faces(1);
  IndexedMatrix c;
  c.matrix = RationalMatrix(tops.size(), edges.size());
  c.row_labels = face_labels(tops);
  c.col_labels = face_labels(edges);
  const Rational twice_prefactor = 2 * cm_prefactor(k);
  for (std::size_t row = 0; row < tops.size(); ++row) {
    const Face& sigma = tops[row];
    const RationalMatrix cm = cayley_menger_matrix(distance_table(lengths, sigma));
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      for (std::size_t j = i + 1; j < sigma.size(); ++j) {
        const long col = x.index_of(Face{sigma[i], sigma[j]});
        // adj(M)_{ij} is the (j,i) cofactor; M is symmetric so it equals the
        // (i,j) cofactor.
        c.matrix(row, col) = twice_prefactor * cofactor(cm, i, j);
      }
    }
  }
  return c;
}

IndexedMatrix build_B(const SimplicialComplex& x, const Embedding& p) {
  require_matrix_ready(x);
  require_points(p, x.n_vertices());
  const IndexedMatrix c = build_C(x, squared_edge_lengths(x, p));
  const IndexedMatrix r = build_R(one_skeleton(x), p);
  IndexedMatrix b;
  b.matrix = matmul(c.matrix, r.matrix);
  b.row_labels = c.row_labels;
  b.col_labels = r.col_labels;
  return b;
}

IndexedMatrix build_B_gram(const SimplicialComplex& x, const Embedding& p) {
  require_matrix_ready(x);
  require_points(p, x.n_vertices());
  const int k = x.dim();
  const int d = p.d;
  const std::vector<Face>& tops = x.faces(k);
  IndexedMatrix b;
  b.matrix = RationalMatrix(tops.size(), static_cast<std::size_t>(d) * x.n_vertices());
  b.row_labels = face_labels(tops);
  b.col_labels = vertex_coordinate_labels(x.n_vertices(), d);
  const Integer kf = factorial(k);
  const Rational scale = Rational(2) / Rational(kf * kf);

  for (std::size_t row = 0; row < tops.size(); ++row) {
    const Face& sigma = tops[row];
    // Edge vectors from sigma[0]; d x k.
    RationalMatrix v(d, k);
    for (int j = 0; j < k; ++j) {
      for (int i = 0; i < d; ++i) v(i, j) = p[sigma[j + 1]][i] - p[sigma[0]][i];
    }
    const RationalMatrix gram = matmul(v.transpose(), v);
    // vol^2 = det(G)/(k!)^2 and d det(G)/dV = 2 V adj(G).
    RationalMatrix adj(k, k);
    if (k == 1) {
      adj(0, 0) = 1;
    } else {
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) adj(i, j) = cofactor(gram, j, i);
      }
    }
    const RationalMatrix grad = matmul(v, adj);
    for (int j = 0; j < k; ++j) {
      const Vertex u = sigma[j + 1];
      for (int i = 0; i < d; ++i) {
        const Rational g = scale * grad(i, j);
        b.matrix(row, u * d + i) += g;
        b.matrix(row, sigma[0] * d + i) -= g;
      }
    }
  }
  return b;
}

Rational lee_scalar(int k) {
  return make_rational(-2, k * k);
}

LeeFactors build_L_D_P(const SimplicialComplex& x, const Embedding& p) {
  require_matrix_ready(x);
  require_points(p, x.n_vertices());
  const int k = x.dim();
  const int d = p.d;
  const int n = x.n_vertices();
  const std::vector<Face>& tops = x.faces(k);
  const std::vector<Face>& bases = x.faces(k - 1);

  std::vector<Label> base_coords;
  for (const Face& tau : bases) {
    for (int c = 0; c < d; ++c) base_coords.push_back({tau, c});
  }

  LeeFactors out;
  out.l.matrix = RationalMatrix(tops.size(), base_coords.size());
  out.l.row_labels = face_labels(tops);
  out.l.col_labels = base_coords;
  for (std::size_t row = 0; row < tops.size(); ++row) {
    const Face& sigma = tops[row];
    for (Vertex v : sigma) {
      const Face tau = sigma.without(v);
      const long t = x.index_of(tau);
      const Point h = altitude_vector(p, sigma, v);
      for (int c = 0; c < d; ++c) out.l.matrix(row, t * d + c) = h[c];
    }
  }

  out.d.matrix = RationalMatrix(base_coords.size(), base_coords.size());
  out.d.row_labels = base_coords;
  out.d.col_labels = base_coords;
  for (std::size_t t = 0; t < bases.size(); ++t) {
    const Rational vol2 = squared_volume(p, bases[t]);
    if (k >= 2 && sgn(vol2) == 0) {
      throw DegenerateError("face " + bases[t].to_string() + " is degenerate");
    }
    for (int c = 0; c < d; ++c) out.d.matrix(t * d + c, t * d + c) = vol2;
  }

  out.p.matrix = RationalMatrix(base_coords.size(), static_cast<std::size_t>(d) * n);
  out.p.row_labels = base_coords;
  out.p.col_labels = vertex_coordinate_labels(n, d);
  for (std::size_t t = 0; t < bases.size(); ++t) {
    for (Vertex v : bases[t]) {
      for (int c = 0; c < d; ++c) out.p.matrix(t * d + c, v * d + c) = 1;
    }
  }
  return out;
}

namespace {

using Real = long double;

// det of the Gram matrix of the edge vectors of `pts` from pts[0].
Real gram_squared_volume(const std::vector<std::vector<Real>>& pts) {
  const std::size_t k = pts.size() - 1;
  const std::size_t d = pts[0].size();
  std::vector<std::vector<Real>> g(k, std::vector<Real>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < d; ++c) {
        g[i][j] += (pts[i + 1][c] - pts[0][c]) * (pts[j + 1][c] - pts[0][c]);
      }
    }
  }
  Real det = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (std::fabs(g[r][c]) > std::fabs(g[piv][c])) piv = r;
    }
    if (g[piv][c] == 0) return 0;
    if (piv != c) {
      std::swap(g[piv], g[c]);
      det = -det;
    }
    det *= g[c][c];
    for (std::size_t r = c + 1; r < k; ++r) {
      const Real f = g[r][c] / g[c][c];
      for (std::size_t j = c; j < k; ++j) g[r][j] -= f * g[c][j];
    }
  }
  Real kf = 1;
  for (std::size_t i = 2; i <= k; ++i) kf *= static_cast<Real>(i);
  return det / (kf * kf);
}

}  // namespace

double fd_jacobian_check(const SimplicialComplex& x, const Embedding& p,
                         double step) {
  const IndexedMatrix b = build_B(x, p);
  const int k = x.dim();
  const int d = p.d;
  double worst = 0;
  for (std::size_t row = 0; row < b.matrix.rows(); ++row) {
    const Face& sigma = x.faces(k)[row];
    Real row_scale = 0;
    for (const Rational& q : b.matrix.row(row)) {
      row_scale = std::max<Real>(row_scale, std::fabs(static_cast<Real>(q.get_d())));
    }
    if (row_scale == 0) row_scale = 1;
    std::vector<std::vector<Real>> pts;
    for (Vertex v : sigma) {
      std::vector<Real> pt;
      for (const Rational& c : p[v]) pt.push_back(static_cast<Real>(c.get_d()));
      pts.push_back(std::move(pt));
    }
    for (std::size_t i = 0; i < sigma.size(); ++i) {
      for (int c = 0; c < d; ++c) {
        const Real x0 = pts[i][c];
        const Real h = static_cast<Real>(step) * std::max<Real>(1, std::fabs(x0));
        pts[i][c] = x0 + h;
        const Real plus = gram_squared_volume(pts);
        pts[i][c] = x0 - h;
        const Real minus = gram_squared_volume(pts);
        pts[i][c] = x0;
        const Real fd = (plus - minus) / (2 * h);
        const Real exact = static_cast<Real>(b.matrix(row, sigma[i] * d + c).get_d());
        worst = std::max(worst, static_cast<double>(std::fabs(fd - exact) / row_scale));
      }
    }
  }
  return worst;
}

}  // namespace volrig
