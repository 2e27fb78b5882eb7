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

#ifndef VOLRIG_GENERIC_RANK_HPP_
#define VOLRIG_GENERIC_RANK_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "volrig/complex.hpp"
#include "volrig/exact_linalg.hpp"

namespace volrig {

enum class RankMode { kExact, kModP };

std::string to_string(RankMode mode);
// "exact" or "modp"; throws ParameterError otherwise.
RankMode rank_mode_from_string(const std::string& s);

struct RankConfig {
  int trials = 3;
  std::uint64_t seed = 1;
  // kModP ranks every trial modulo a random 62-bit prime, then confirms the
  // best trial with one exact elimination.
  RankMode mode = RankMode::kModP;
  // Coordinate size of the random embeddings.
  int bits = 20;
};

// Max-over-trials rank of a parameterized matrix. `value` is a lower bound
// on the generic rank; it is the generic rank when it meets `upper_bound`.
struct RankReport {
  long value = 0;
  int trials = 0;
  int trials_run = 0;
  std::uint64_t seed = 0;
  RankMode mode = RankMode::kExact;
  long upper_bound = 0;
  bool certified_equal = false;
  // Empty when certified; otherwise "below-a-priori-bound".
  std::string caveat;
  std::vector<long> trial_values;
  std::uint64_t best_trial_seed = 0;

  nlohmann::json to_json() const;
};

// Runs `build(trial_seed)` for each trial. Trials stop early once a trial
// reaches `upper_bound`.
RankReport max_rank_over_trials(
    const std::function<RationalMatrix(std::uint64_t)>& build,
    long upper_bound, const RankConfig& cfg);

// Seed of trial t under base seed s.
std::uint64_t trial_seed(std::uint64_t base, int trial);

// Bound on rank R(G, p) for a graph touching `touched` vertices in R^d:
// d n - C(d+1, 2) when n >= d+1, otherwise C(n, 2).
long rigidity_rank_bound(int touched, int d);

// A priori bound on rank B(X, p): min(|X_k|, |X_1|, rigidity bound of the
// 1-skeleton), further capped by d n - (d^2 + d - 1) when k = d and the
// skeleton spans at least d+1 vertices (volume-preserving affine motions).
long volume_rank_bound(const SimplicialComplex& x, int d);

// Random embedding in R^d of all n_vertices of x for a given trial seed.
RankReport generic_rank_B(const SimplicialComplex& x, int d,
                          const RankConfig& cfg);

RankReport generic_rank_R(const Graph& g, int d, const RankConfig& cfg);

struct LengthMode {
  // nullopt: free mode, squared lengths are independent random positive
  // integers in [1, 2^bits]. Otherwise lengths come from a random embedding
  // in R^d.
  std::optional<int> embedding_dim;
};

RankReport generic_rank_C(const SimplicialComplex& x, const RankConfig& cfg,
                          LengthMode lengths);

struct EdgeSetRank {
  RankReport report;
  bool independent = false;
};

// Generic d-rigidity rank of an edge subset over vertices 0..n-1.
EdgeSetRank edge_set_rank(const std::vector<Edge>& edges, int n, int d,
                          const RankConfig& cfg);

// Generic rank of the rows of B(X, p) indexed by `rows` (top-dimensional
// faces of x).
RankReport rows_rank(const SimplicialComplex& x, int d,
                     const std::vector<Face>& rows, const RankConfig& cfg);

}  // namespace volrig

#endif  // VOLRIG_GENERIC_RANK_HPP_
