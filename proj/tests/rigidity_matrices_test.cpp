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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "volrig/errors.hpp"
#include "volrig/inclusion_matrices.hpp"
#include "volrig/rigidity_matrices.hpp"

namespace volrig {
namespace {

using testing_support::face_points;
using testing_support::random_pure_complex;

// Squared volume from squared lengths through the bordered determinant,
// evaluated by Leibniz expansion.
oracle::Q cm_oracle(const std::vector<std::vector<oracle::Q>>& dist) {
  const std::size_t m = dist.size();
  oracle::Matrix cm(m + 1, std::vector<oracle::Q>(m + 1, 1));
  cm[0][0] = 0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) cm[i + 1][j + 1] = dist[i][j];
  }
  const int k = static_cast<int>(m) - 1;
  const oracle::Q kf = oracle::factorial(k);
  oracle::Q pow2 = 1;
  for (int i = 0; i < k; ++i) pow2 *= 2;
  oracle::Q pre = 1 / (kf * kf * pow2);
  if (k % 2 == 0) pre = -pre;
  return pre * oracle::leibniz_det(cm);
}

TEST(BuildB, EqualsExactCentralDifferences) {
  // vol^2 is quadratic in each coordinate, so a unit central difference is
  // the exact partial derivative.
  std::mt19937_64 rng(31);
  for (int k = 1; k <= 3; ++k) {
    const int d = k + 1;
    const SimplicialComplex x = random_pure_complex(k + 3, k, 0.6, rng);
    const Embedding p = random_rational_embedding(x.n_vertices(), d, 100 + k, 6);
    const IndexedMatrix b = build_B(x, p);
    ASSERT_TRUE(b.consistent());
    for (std::size_t row = 0; row < x.count(k); ++row) {
      const Face& sigma = x.faces(k)[row];
      for (Vertex v = 0; v < x.n_vertices(); ++v) {
        for (int c = 0; c < d; ++c) {
          oracle::Q expected = 0;
          if (sigma.contains(v)) {
            auto pts = face_points(p, sigma);
            const int i = sigma.index_of(v);
            pts[i][c] += 1;
            const oracle::Q plus = oracle::gram_squared_volume(pts);
            pts[i][c] -= 2;
            const oracle::Q minus = oracle::gram_squared_volume(pts);
            expected = (plus - minus) / 2;
          }
          EXPECT_EQ(b.matrix(row, v * d + c), expected);
        }
      }
    }
  }
}

TEST(BuildC, EqualsExactLengthDerivatives) {
  for (int k = 1; k <= 3; ++k) {
    const SimplicialComplex x = complete_complex(k + 2, k);
    const Embedding p = random_rational_embedding(x.n_vertices(), k + 1, 7 + k, 6);
    const SquaredLengths lengths = squared_edge_lengths(x, p);
    const IndexedMatrix c = build_C(x, lengths);
    for (std::size_t row = 0; row < x.count(k); ++row) {
      const Face& sigma = x.faces(k)[row];
      for (std::size_t col = 0; col < x.count(1); ++col) {
        const Edge& e = x.faces(1)[col];
        oracle::Q expected = 0;
        if (e.is_subset_of(sigma)) {
          std::vector<std::vector<oracle::Q>> dist(sigma.size(),
                                                   std::vector<oracle::Q>(sigma.size(), 0));
          for (std::size_t i = 0; i < sigma.size(); ++i) {
            for (std::size_t j = 0; j < sigma.size(); ++j) {
              if (i != j) dist[i][j] = lengths.at(Face{sigma[i], sigma[j]});
            }
          }
          const int a = sigma.index_of(e[0]);
          const int b = sigma.index_of(e[1]);
          auto plus = dist;
          plus[a][b] += 1;
          plus[b][a] += 1;
          auto minus = dist;
          minus[a][b] -= 1;
          minus[b][a] -= 1;
          expected = (cm_oracle(plus) - cm_oracle(minus)) / 2;
        }
        EXPECT_EQ(c.matrix(row, col), expected);
      }
    }
  }
}

TEST(BuildC, RegularSimplexIsScaledInclusionMatrix) {
  // Unit triangle: d/da of (2ab + 2bc + 2ca - a^2 - b^2 - c^2)/16 at 1 is 1/8.
  for (int d = 2; d <= 5; ++d) {
    const SimplicialComplex x = complete_complex(d + 1, 2);
    SquaredLengths unit;
    unit.edges = x.faces(1);
    unit.values.assign(unit.edges.size(), 1);
    const IndexedMatrix c = build_C(x, unit);
    const IndexedMatrix a = inclusion_matrix(d + 1, 3, 2);
    EXPECT_EQ(c.matrix, a.matrix.scaled(make_rational(1, 8)));
  }
}

TEST(BuildB, ChainRuleMatchesGramGradient) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 12; ++trial) {
    const int k = 1 + trial % 3;
    const int d = k + trial % 2;
    const SimplicialComplex x = random_pure_complex(6, k, 0.5, rng);
    const Embedding p = random_rational_embedding(6, d, rng());
    EXPECT_EQ(build_B(x, p).matrix, build_B_gram(x, p).matrix);
  }
}

TEST(BuildB, EdgesGiveRigidityMatrix) {
  const SimplicialComplex x = complete_complex(5, 1);
  const Embedding p = random_rational_embedding(5, 3, 1);
  EXPECT_EQ(build_B(x, p).matrix, build_R(one_skeleton(x), p).matrix);
}

TEST(BuildB, LabelsFollowFaceAndCoordinateOrder) {
  const SimplicialComplex x = complete_complex(4, 2);
  const IndexedMatrix b = build_B(x, random_rational_embedding(4, 2, 3));
  ASSERT_EQ(b.row_labels.size(), 4u);
  EXPECT_EQ(b.row_labels[0].face, (Face{0, 1, 2}));
  ASSERT_EQ(b.col_labels.size(), 8u);
  EXPECT_EQ(b.col_labels[3].face, (Face{1}));
  EXPECT_EQ(b.col_labels[3].coord, 1);
  const auto j = b.to_json();
  EXPECT_EQ(j["row_labels"].size(), 4u);
  EXPECT_EQ(j["row_labels"][0], "{0,1,2}");
  EXPECT_EQ(j["col_labels"][3], "{1}.1");
}

TEST(BuildB, RejectsNonPureAndShortEmbeddings) {
  const std::vector<Face> facets = {Face{0, 1, 2}, Face{2, 3}};
  const SimplicialComplex x = from_facets(4, facets);
  EXPECT_THROW(build_B(x, random_rational_embedding(4, 2, 1)), ParameterError);
  EXPECT_THROW(build_B(complete_complex(4, 2), random_rational_embedding(3, 2, 1)),
               ParameterError);
  EXPECT_THROW(build_C(complete_complex(3, 0), SquaredLengths{}), ParameterError);
}

TEST(Lee, FactorizationHoldsForEveryDimension) {
  for (int k = 1; k <= 4; ++k) {
    const SimplicialComplex x = complete_complex(k + 2, k);
    const Embedding p = random_rational_embedding(k + 2, k + 1, 50 + k, 8);
    const LeeFactors f = build_L_D_P(x, p);
    const RationalMatrix ldp = f.l.matrix * f.d.matrix * f.p.matrix;
    EXPECT_EQ(build_B(x, p).matrix, ldp.scaled(lee_scalar(k))) << "k=" << k;
    EXPECT_EQ(lee_scalar(k), make_rational(-2, k * k));
  }
}

TEST(Lee, FactorialScalarOnlyAgreesUpToTriangles) {
  for (int k = 1; k <= 4; ++k) {
    const SimplicialComplex x = complete_complex(k + 2, k);
    const Embedding p = random_rational_embedding(k + 2, k + 1, 80 + k, 8);
    const LeeFactors f = build_L_D_P(x, p);
    const oracle::Q kf = oracle::factorial(k);
    const RationalMatrix ldp = f.l.matrix * f.d.matrix * f.p.matrix;
    const bool factorial_form = build_B(x, p).matrix == ldp.scaled(-2 / (kf * kf));
    EXPECT_EQ(factorial_form, k <= 2) << "k=" << k;
  }
}

TEST(FiniteDifference, SmallDeviation) {
  EXPECT_LT(fd_jacobian_check(complete_complex(4, 2), random_rational_embedding(4, 3, 1, 10)),
            1e-5);
  EXPECT_LT(fd_jacobian_check(complete_complex(5, 3), random_rational_embedding(5, 4, 2, 10)),
            1e-5);
  EXPECT_LT(fd_jacobian_check(build_example_41().complex,
                              random_rational_embedding(9, 3, 3, 10)),
            1e-5);
}

}  // namespace
}  // namespace volrig
