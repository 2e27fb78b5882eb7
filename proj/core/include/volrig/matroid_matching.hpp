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

#ifndef VOLRIG_MATROID_MATCHING_HPP_
#define VOLRIG_MATROID_MATCHING_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "volrig/complex.hpp"
#include "volrig/generic_rank.hpp"
#include "volrig/geometry.hpp"
#include "volrig/prime_field.hpp"

namespace volrig {

// Bipartite containment graph H_{A,B}: left i ~ right j iff A_i is a subset
// of B_j (non-strict, so that H_{X_1,X_1} is the identity pairing).
struct IncidenceGraph {
  std::vector<Face> left;
  std::vector<Face> right;
  std::vector<std::vector<int>> adjacency;  // left index -> right indices

  std::size_t edge_count() const;
  // Subgraph on a subset of the left vertices (indices into `left`).
  IncidenceGraph restrict_left(std::span<const std::size_t> keep) const;
};

IncidenceGraph incidence_graph(const std::vector<Face>& a,
                               const std::vector<Face>& b);

struct Matching {
  int size = 0;
  std::vector<int> mate_left;   // right index or -1
  std::vector<int> mate_right;  // left index or -1
};

// Hopcroft-Karp.
Matching maximum_matching(const IncidenceGraph& h);
int matching_number(const IncidenceGraph& h);

// Rank function of a matroid on ground set 0..ground_size()-1.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  virtual std::size_t ground_size() const = 0;
  virtual std::size_t rank(std::span<const std::size_t> subset) const = 0;
};

// Row matroid of R(G, p) for one fixed random embedding p, ranked modulo a
// fixed 62-bit prime. Among cfg.trials candidate embeddings the one with the
// largest full rank is kept. Being a linear matroid it satisfies the matroid
// axioms exactly; its rank is a lower bound on the generic rigidity rank.
class RigidityOracle final : public RankOracle {
 public:
  RigidityOracle(std::vector<Edge> ground, int n, int d, const RankConfig& cfg);

  std::size_t ground_size() const override { return ground_.size(); }
  std::size_t rank(std::span<const std::size_t> subset) const override;
  // Same rows ranked over the rationals.
  std::size_t rank_exact(std::span<const std::size_t> subset) const;

  const std::vector<Edge>& ground() const { return ground_; }
  const Embedding& embedding() const { return embedding_; }
  std::uint64_t prime() const { return prime_; }
  std::uint64_t embedding_seed() const { return embedding_seed_; }

 private:
  std::vector<Edge> ground_;
  Embedding embedding_;
  std::uint64_t prime_ = 0;
  std::uint64_t embedding_seed_ = 0;
  RationalMatrix rows_;
  std::vector<std::uint64_t> rows_modp_;
  std::size_t cols_ = 0;
};

// Transversal matroid of H on its left vertex set.
class TransversalOracle final : public RankOracle {
 public:
  explicit TransversalOracle(IncidenceGraph h) : h_(std::move(h)) {}
  std::size_t ground_size() const override { return h_.left.size(); }
  std::size_t rank(std::span<const std::size_t> subset) const override;

 private:
  IncidenceGraph h_;
};

struct IntersectionResult {
  std::vector<std::size_t> common;  // maximum common independent set
  // Elements reachable from the sources in the final exchange graph; the
  // cover is (ground minus reachable) for matroid 1 and reachable for 2.
  std::vector<std::size_t> reachable;
  std::size_t cover_rank_1 = 0;
  std::size_t cover_rank_2 = 0;
  bool dual_certified = false;  // cover ranks sum to |common|
  long queries = 0;
  int augmentations = 0;
};

// Shortest-augmenting-path matroid intersection. Every oracle answer is
// audited against the current independent set (rank(I) = |I|, unit increase
// and decrease); a violation throws OracleAuditError.
IntersectionResult matroid_intersection(const RankOracle& m1,
                                        const RankOracle& m2);

struct RadoResult {
  long value = 0;
  std::vector<Edge> common_edges;
  std::vector<Edge> cover_edges_1;
  std::vector<Edge> reachable_edges;
  std::size_t cover_rank_1 = 0;
  std::size_t cover_rank_2 = 0;
  bool dual_certified = false;
  bool exact_verified = false;  // common set independent over Q at the same p
  std::uint64_t oracle_seed = 0;
  std::uint64_t prime = 0;

  nlohmann::json to_json() const;
};

// Max over d-rigidity-independent E of nu(H_{E, X_k}), as a matroid
// intersection of the rigidity matroid and the transversal matroid of
// H_{X_1, X_k} on X_1.
RadoResult rado_rank(const SimplicialComplex& x, int d, const RankConfig& cfg);

struct HallOptions {
  // Maximum number of subsets in the exhaustive phase.
  std::size_t budget = std::size_t{1} << 16;
  // Stop at the first S with negative deficiency.
  bool stop_at_first_violation = false;
};

struct HallResult {
  long min_deficiency = 0;
  std::vector<Face> witness;
  long witness_rank = 0;
  bool exhaustive = false;
  std::size_t scanned = 0;
  std::size_t structured_scanned = 0;
  // Scanned S whose B-rows had full rank |S| at the oracle embedding; each
  // had non-negative deficiency.
  std::size_t full_rank_rows = 0;
  bool only_if_holds = true;
  std::uint64_t oracle_seed = 0;

  nlohmann::json to_json() const;
};

// Minimum over scanned S of rank(1-skeleton of X[S]) - |S|. First the
// structured candidates (all of X_k, and X_k minus the star of each vertex),
// then every S by increasing size, lexicographically, up to the budget.
HallResult hall_deficiency(const SimplicialComplex& x, int d,
                           const RankConfig& cfg, const HallOptions& opts = {});

struct ConjectureVerdict {
  std::string claim;
  long lhs = 0;
  long rhs = 0;
  bool agree = false;
  nlohmann::json details;

  nlohmann::json to_json() const;
};

// rank B(X, p) against rado_rank(X, d). Reports agreement only.
ConjectureVerdict check_conjecture_41(const SimplicialComplex& x, int d,
                                      const RankConfig& cfg);

// Generic rank of C at free lengths against nu(H_{X_1, X_k}).
// Requires 2 <= k <= n-2.
ConjectureVerdict check_conjecture_43(const SimplicialComplex& x,
                                      const RankConfig& cfg);

}  // namespace volrig

#endif  // VOLRIG_MATROID_MATCHING_HPP_
