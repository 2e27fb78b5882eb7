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

// Slow, obviously-correct reference computations used as test oracles. None
// of them call into the library's elimination or volume code.
#ifndef VOLRIG_TESTS_ORACLES_HPP_
#define VOLRIG_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Matrix = std::vector<std::vector<Q>>;

// Plain Gauss-Jordan over Q.
inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Leibniz expansion; fine up to 8x8.
inline Q leibniz_det(const Matrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Q total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    }
    Q term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m[i][perm[i]];
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Determinant by elimination with rational pivots.
inline Q gauss_det(Matrix m) {
  const std::size_t n = m.size();
  Q det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Q f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

inline Q factorial(int k) {
  Q f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// det(V^T V) / (k!)^2 with V the edge vectors from the first point.
inline Q gram_squared_volume(const std::vector<std::vector<Q>>& pts) {
  const std::size_t k = pts.size() - 1;
  if (k == 0) return 1;
  Matrix g(k, std::vector<Q>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      Q s = 0;
      for (std::size_t c = 0; c < pts[0].size(); ++c) {
        s += (pts[a + 1][c] - pts[0][c]) * (pts[b + 1][c] - pts[0][c]);
      }
      g[a][b] = s;
    }
  }
  const Q kf = factorial(static_cast<int>(k));
  return gauss_det(g) / (kf * kf);
}

// Maximum bipartite matching by exhaustive search over left vertices.
inline int brute_matching(const std::vector<std::vector<int>>& adj, int n_right) {
  std::vector<bool> used(n_right, false);
  int best = 0;
  auto go = [&](auto&& self, std::size_t i, int size) -> void {
    if (size + static_cast<int>(adj.size() - i) <= best) return;
    if (i == adj.size()) {
      best = std::max(best, size);
      return;
    }
    for (int r : adj[i]) {
      if (used[r]) continue;
      used[r] = true;
      self(self, i + 1, size + 1);
      used[r] = false;
    }
    self(self, i + 1, size);
  };
  go(go, 0, 0);
  return best;
}

// rows x cols integer matrix of rank <= r: product of random factors.
inline Matrix low_rank_matrix(std::size_t rows, std::size_t cols, std::size_t r,
                              int span, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-span, span);
  Matrix a(rows, std::vector<Q>(r));
  Matrix b(r, std::vector<Q>(cols));
  for (auto& row : a) for (auto& x : row) x = dist(rng);
  for (auto& row : b) for (auto& x : row) x = dist(rng);
  Matrix m(rows, std::vector<Q>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t t = 0; t < r; ++t) m[i][j] += a[i][t] * b[t][j];
    }
  }
  return m;
}

}  // namespace oracle

#endif  // VOLRIG_TESTS_ORACLES_HPP_
