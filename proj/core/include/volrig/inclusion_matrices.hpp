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

#ifndef VOLRIG_INCLUSION_MATRICES_HPP_
#define VOLRIG_INCLUSION_MATRICES_HPP_

#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "volrig/rigidity_matrices.hpp"

namespace volrig {

// 0/1 matrix with rows the s-subsets and columns the t-subsets of {0..n-1},
// both in lexicographic order; entry 1 iff the column subset is contained in
// the row subset. Requires 0 < t <= s <= n.
IndexedMatrix inclusion_matrix(int n, int s, int t);

long inclusion_rank(int n, int s, int t);

// Reduction of C(Delta_{d+2,d-1}) at the "regular simplex plus centroid"
// configuration to the inclusion matrix A^{d+2}_{d,2}.
struct ScalingReduction {
  int d = 0;
  int k = 0;
  std::uint64_t seed = 0;
  Vertex centroid = 0;  // label carrying the centroid point
  Rational alpha;       // centroid not in T
  Rational beta;        // centroid in e
  Rational gamma;       // centroid in T but not in e
  bool gamma_present = false;  // false when k = 1 (every e in T equals T)
  bool orbits_consistent = false;
  bool values_nonzero = false;
  bool matches_inclusion = false;
  // Exact rank of B at the same configuration and its expected value
  // d(d+2) - C(d+1, 2).
  long special_rank_b = 0;
  long expected_rank_b = 0;

  bool pass() const {
    return orbits_consistent && values_nonzero && matches_inclusion &&
           special_rank_b == expected_rank_b;
  }
  nlohmann::json to_json() const;
};

// seed 0 puts the centroid on vertex 0; other seeds relabel the d+2 points by
// a seeded random permutation. Requires d >= 2. Throws std::logic_error when
// the entries do not follow the three-orbit pattern.
ScalingReduction scaled_C_reduction_check(int d, std::uint64_t seed = 0);

}  // namespace volrig

#endif  // VOLRIG_INCLUSION_MATRICES_HPP_
