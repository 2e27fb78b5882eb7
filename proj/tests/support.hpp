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

#ifndef VOLRIG_TESTS_SUPPORT_HPP_
#define VOLRIG_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "oracles.hpp"
#include "volrig/complex.hpp"
#include "volrig/exact_linalg.hpp"
#include "volrig/geometry.hpp"

namespace testing_support {

inline oracle::Matrix to_rows(const volrig::RationalMatrix& m) {
  oracle::Matrix out(m.rows(), std::vector<oracle::Q>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

// Random pure k-complex: each k-subset of n vertices kept with probability
// `keep`, at least one facet.
inline volrig::SimplicialComplex random_pure_complex(int n, int k, double keep,
                                                     std::mt19937_64& rng) {
  std::bernoulli_distribution coin(keep);
  std::vector<volrig::Face> facets;
  for (const volrig::Face& f : volrig::subsets(n, k + 1)) {
    if (coin(rng)) facets.push_back(f);
  }
  if (facets.empty()) facets.push_back(volrig::subsets(n, k + 1).front());
  return volrig::from_facets(n, facets);
}

inline std::vector<std::vector<oracle::Q>> face_points(const volrig::Embedding& p,
                                                       const volrig::Face& f) {
  std::vector<std::vector<oracle::Q>> pts;
  for (volrig::Vertex v : f) pts.push_back(p[v]);
  return pts;
}

}  // namespace testing_support

#endif  // VOLRIG_TESTS_SUPPORT_HPP_
