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

#ifndef VOLRIG_VERIFIERS_HPP_
#define VOLRIG_VERIFIERS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "volrig/complex.hpp"
#include "volrig/exact_linalg.hpp"
#include "volrig/generic_rank.hpp"
#include "volrig/matroid_matching.hpp"

namespace volrig {

// Outcome of one claim check. `certified` is false whenever `pass` rests on a
// randomized equality that no a priori bound confirms.
struct Verdict {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  nlohmann::json computed = nlohmann::json::object();
  nlohmann::json expected = nlohmann::json::object();
  bool pass = false;
  bool certified = false;
  // exact | certified | monte-carlo | heuristic | float | instance
  std::string mode;
  std::uint64_t seed = 0;
  double runtime_ms = 0;
  std::string note;

  // 0 pass, 1 fail, 4 pass without certification.
  int exit_code() const { return !pass ? 1 : (certified ? 0 : 4); }
  nlohmann::json to_json() const;
};

struct VerifyConfig {
  RankConfig rank;
  HallOptions hall;
  // Also checks the closed forms for the linear and constant coefficients
  // of the volume quadratic. Off by default.
  bool stretch = false;
};

// Generic rank of B(Delta_{n,k}) in R^d against d n - C(d+1, 2). The cell
// k = d-1, n = d+1 is routed to check_prop33 and k = d to check_k_equals_d;
// other cells outside the theorem's range throw ParameterError.
Verdict check_theorem1(int d, int k, int n, const VerifyConfig& cfg);

// Generic rank of B(Delta_{d+1,d-1}) in R^d against d + 1.
Verdict check_prop33(int d, const VerifyConfig& cfg);

// Generic rank of B(Delta_{n,d}) in R^d against d n - (d^2 + d - 1).
Verdict check_k_equals_d(int d, int n, const VerifyConfig& cfg);

// rank B(X) >= rank B(X \ v) + d. Throws ParameterError unless the link of
// v is the complete (k-1)-complex on the other vertices, 1 <= k <= d-1 and
// n >= d+1.
Verdict check_vertex_addition(const SimplicialComplex& x, Vertex v, int d,
                              const VerifyConfig& cfg);

// Volume quadratic of a (k+1)x(k+1) squared-distance table whose (0,1)
// entry is free.
Verdict check_lemma22(const RationalMatrix& fixed_table,
                      const VerifyConfig& cfg);

// Squared length of edge {0,1} at which faces {0,2..k} and {1,2..k} are
// orthogonal, computed from the fixed lengths through the base Gram matrix.
Rational orthogonal_squared_length(const RationalMatrix& fixed_table);

Verdict check_example41(const VerifyConfig& cfg);

// B as C * R against B assembled from Gram-determinant gradients.
Verdict check_chain_rule(const SimplicialComplex& x, int d, std::uint64_t seed);

// B = -2/k^2 L D P, the altitude-sum identity and the altitude-volume
// identity, exactly. Resamples the embedding on degeneracy.
Verdict check_lee_factorization(const SimplicialComplex& x, int d,
                                std::uint64_t seed);

Verdict check_scaling_reduction(int d, std::uint64_t seed);

Verdict check_fd_jacobian(const SimplicialComplex& x, int d,
                          std::uint64_t seed, double step = 1e-6,
                          double tolerance = 1e-5);

Verdict check_conj41(const SimplicialComplex& x, int d, const VerifyConfig& cfg);
Verdict check_conj42(const SimplicialComplex& x, int d, const VerifyConfig& cfg);
Verdict check_conj43(const SimplicialComplex& x, const VerifyConfig& cfg);

struct GridCell {
  int d = 0;
  int k = 0;
  int n = 0;
};

// Cells with 2 <= d <= dmax, 1 <= k <= d, n <= nmax that fall under the
// main rank formula, the k = d-1, n = d+1 case or the k = d formula.
std::vector<GridCell> grid_cells(int dmax, int nmax);

// Runs every cell on up to `jobs` threads; cell i uses seed
// derive_seed(seed, i). Results come back in cell order.
std::vector<Verdict> run_grid(int dmax, int nmax, std::uint64_t seed, int jobs,
                              const VerifyConfig& cfg);

}  // namespace volrig

#endif  // VOLRIG_VERIFIERS_HPP_
