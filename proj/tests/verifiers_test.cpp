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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "volrig/errors.hpp"
#include "volrig/geometry.hpp"
#include "volrig/verifiers.hpp"

namespace volrig {
namespace {

// The glued counterexample with one more vertex joined to every edge, so the new vertex's
// link is the complete graph on the other nine vertices.
SimplicialComplex example_cone() {
  const SimplicialComplex ex = build_example_41().complex;
  std::vector<Face> facets = ex.faces(2);
  for (const Face& e : subsets(9, 2)) facets.push_back(e.with(9));
  return from_facets(10, facets);
}

TEST(RigidityCheck, RoutesAndRanges) {
  VerifyConfig cfg;
  const Verdict main = check_theorem1(3, 1, 6, cfg);
  EXPECT_EQ(main.claim, "theorem1");
  EXPECT_TRUE(main.pass);
  EXPECT_TRUE(main.certified);
  EXPECT_EQ(main.computed["rank"], 12);
  EXPECT_EQ(main.exit_code(), 0);
  EXPECT_EQ(check_theorem1(3, 2, 4, cfg).claim, "prop33");
  EXPECT_EQ(check_theorem1(3, 3, 5, cfg).claim, "kd");
  EXPECT_THROW(check_theorem1(4, 1, 4, cfg), ParameterError);
  EXPECT_THROW(check_theorem1(1, 1, 4, cfg), ParameterError);
  EXPECT_THROW(check_theorem1(3, 4, 6, cfg), ParameterError);
}

TEST(RigidityCheck, SimplexAndTopDimension) {
  VerifyConfig cfg;
  for (int d = 2; d <= 5; ++d) {
    const Verdict v = check_prop33(d, cfg);
    EXPECT_TRUE(v.pass && v.certified);
    EXPECT_EQ(v.computed["rank"], d + 1);
  }
  const Verdict kd = check_k_equals_d(3, 6, cfg);
  EXPECT_EQ(kd.computed["rank"], 18 - 11);
  EXPECT_TRUE(kd.certified);
  EXPECT_THROW(check_k_equals_d(3, 3, cfg), ParameterError);
}

TEST(VertexAddition, CertifiedOnCompleteComplexes) {
  VerifyConfig cfg;
  const Verdict v = check_vertex_addition(complete_complex(6, 2), 5, 3, cfg);
  EXPECT_TRUE(v.pass);
  EXPECT_TRUE(v.certified);
  EXPECT_EQ(v.mode, "certified");
  EXPECT_EQ(v.computed["rank_with"], 12);
  EXPECT_EQ(v.computed["rank_without"], 9);
}

TEST(VertexAddition, HeuristicWhenSmallerSideIsUncertified) {
  VerifyConfig cfg;
  const Verdict v = check_vertex_addition(example_cone(), 9, 3, cfg);
  EXPECT_TRUE(v.pass);
  EXPECT_FALSE(v.certified);
  EXPECT_EQ(v.mode, "heuristic");
  EXPECT_EQ(v.computed["rank_without"], 20);
  EXPECT_EQ(v.exit_code(), 4);
}

TEST(VertexAddition, RequiresCompleteLink) {
  VerifyConfig cfg;
  EXPECT_THROW(check_vertex_addition(build_example_41().complex, 8, 3, cfg), ParameterError);
  EXPECT_THROW(check_vertex_addition(complete_complex(6, 3), 5, 3, cfg), ParameterError);
}

TEST(TwoFaceQuadratic, UnitTables) {
  VerifyConfig cfg;
  cfg.stretch = true;
  const Verdict two = check_lemma22(regular_simplex_table(2, false), cfg);
  EXPECT_TRUE(two.pass);
  EXPECT_EQ(two.computed["a"], "-1/16");
  EXPECT_EQ(two.computed["critical_point"], "2/1");
  const Verdict three = check_lemma22(regular_simplex_table(3, false), cfg);
  EXPECT_TRUE(three.pass);
  EXPECT_EQ(three.computed["a"], "-1/144");
}

TEST(TwoFaceQuadratic, RandomTablesAgainstGramOracle) {
  VerifyConfig cfg;
  cfg.stretch = true;
  for (int k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const Embedding p = random_rational_embedding(k + 1, k, seed * 13 + k, 6);
      std::vector<Vertex> all(k + 1);
      for (int i = 0; i <= k; ++i) all[i] = i;
      const RationalMatrix table = distance_table(p, Face(all));
      const Verdict v = check_lemma22(table, cfg);
      EXPECT_TRUE(v.pass) << v.to_json().dump();
      // A = -vol_{k-2}(base)^2 / (4 k^2 (k-1)^2) with the base volume from Gram.
      std::vector<std::vector<oracle::Q>> base(p.points.begin() + 2, p.points.end());
      const oracle::Q a = -oracle::gram_squared_volume(base) / (4 * k * k * (k - 1) * (k - 1));
      EXPECT_EQ(v.computed["a"], rational_to_string(a));
    }
  }
}

TEST(TwoFaceQuadratic, OrthogonalLengthOfTriangle) {
  RationalMatrix t(3, 3);
  t(0, 2) = t(2, 0) = 5;
  t(1, 2) = t(2, 1) = 7;
  EXPECT_EQ(orthogonal_squared_length(t), 12);
}

TEST(Example41, VerdictIsCertified) {
  VerifyConfig cfg;
  const Verdict v = check_example41(cfg);
  EXPECT_TRUE(v.pass) << v.computed.dump();
  EXPECT_TRUE(v.certified);
  EXPECT_EQ(v.computed["rank_R"], 21);
  EXPECT_EQ(v.computed["rank_C"], 21);
  EXPECT_EQ(v.computed["rank_B"], 20);
  EXPECT_EQ(v.computed["rank_B_upper"], 20);
  EXPECT_EQ(v.computed["rank_R_z"], 17);
}

TEST(ExactIdentities, ChainLeeScalingFd) {
  const SimplicialComplex ex = build_example_41().complex;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    EXPECT_TRUE(check_chain_rule(ex, 3, seed).pass);
    EXPECT_TRUE(check_chain_rule(complete_complex(6, 3), 4, seed).pass);
    const Verdict lee2 = check_lee_factorization(complete_complex(5, 2), 3, seed);
    EXPECT_TRUE(lee2.pass);
    EXPECT_TRUE(lee2.computed["factorial_scalar_form"].get<bool>());
    const Verdict lee3 = check_lee_factorization(complete_complex(5, 3), 3, seed);
    EXPECT_TRUE(lee3.pass);
    EXPECT_FALSE(lee3.computed["factorial_scalar_form"].get<bool>());
    EXPECT_TRUE(check_scaling_reduction(3, seed).pass);
  }
  EXPECT_TRUE(check_fd_jacobian(ex, 3, 1).pass);
}

TEST(Conjectures, VerdictWrappers) {
  VerifyConfig cfg;
  const Verdict c41 = check_conj41(complete_complex(5, 2), 3, cfg);
  EXPECT_TRUE(c41.pass);
  EXPECT_EQ(c41.computed["rank_B"], 9);
  EXPECT_EQ(c41.computed["rado"], 9);
  const Verdict c43 = check_conj43(complete_complex(5, 2), cfg);
  EXPECT_TRUE(c43.pass);
  // Delta_{5,2} minus a triangle has exactly 3n - 6 triangles.
  std::vector<Face> facets = subsets(5, 3);
  facets.pop_back();
  const Verdict c42 = check_conj42(from_facets(5, facets), 3, cfg);
  EXPECT_TRUE(c42.pass);
  EXPECT_TRUE(c42.certified);
  ASSERT_TRUE(c42.computed.contains("agree"));
  EXPECT_TRUE(c42.computed["agree"].get<bool>());
}

TEST(Grid, CellsAndDeterminismAcrossJobCounts) {
  EXPECT_TRUE(grid_cells(1, 8).empty());
  EXPECT_EQ(grid_cells(4, 8).size(), 43u);
  VerifyConfig cfg;
  const auto one = run_grid(3, 6, 5, 1, cfg);
  const auto many = run_grid(3, 6, 5, 3, cfg);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].computed, many[i].computed);
    EXPECT_EQ(one[i].params, many[i].params);
    EXPECT_TRUE(one[i].pass);
  }
}

}  // namespace
}  // namespace volrig
