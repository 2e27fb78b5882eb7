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

#include "support.hpp"
#include "volrig/complex.hpp"
#include "volrig/errors.hpp"
#include "volrig/json_io.hpp"

namespace volrig {
namespace {

TEST(Face, SortsAndRejectsDuplicates) {
  const Face f{3, 1, 2};
  EXPECT_EQ(f.vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(f.dim(), 2);
  EXPECT_EQ(f.to_string(), "{1,2,3}");
  EXPECT_THROW((Face{1, 1}), ParameterError);
  EXPECT_THROW((Face{-1, 2}), ParameterError);
}

TEST(Face, SubsetAndEditing) {
  const Face f{0, 2, 5};
  EXPECT_TRUE((Face{0, 5}).is_subset_of(f));
  EXPECT_FALSE((Face{1}).is_subset_of(f));
  EXPECT_EQ(f.without(2), (Face{0, 5}));
  EXPECT_EQ(f.with(3), (Face{0, 2, 3, 5}));
  EXPECT_EQ(f.index_of(5), 2);
  EXPECT_EQ(f.index_of(4), -1);
}

TEST(CompleteComplex, FaceCountsAreBinomials) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 0; k < n; ++k) {
      const SimplicialComplex x = complete_complex(n, k);
      ASSERT_EQ(x.dim(), k);
      for (int i = 0; i <= k; ++i) {
        long long expected = 1;
        for (int j = 0; j <= i; ++j) expected = expected * (n - j) / (j + 1);
        EXPECT_EQ(static_cast<long long>(x.count(i)), expected) << n << " " << k << " " << i;
      }
      EXPECT_TRUE(x.is_pure());
      EXPECT_TRUE(x.is_downward_closed());
    }
  }
  EXPECT_THROW(complete_complex(3, 3), ParameterError);
}

TEST(CompleteComplex, LinkAndDeletion) {
  for (int n = 3; n <= 7; ++n) {
    for (int k = 1; k < n - 1; ++k) {
      const SimplicialComplex x = complete_complex(n, k);
      for (Vertex v = 0; v < n; ++v) {
        EXPECT_EQ(link(x, v), complete_complex(n - 1, k - 1));
        EXPECT_EQ(delete_vertex(x, v), complete_complex(n - 1, k));
      }
    }
  }
}

TEST(SimplicialComplex, FromFacetsIsDownwardClosed) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const SimplicialComplex x = testing_support::random_pure_complex(7, 2, 0.4, rng);
    EXPECT_TRUE(x.is_downward_closed());
    EXPECT_EQ(x.count(0), 7u);
    for (const Face& f : x.facets()) EXPECT_TRUE(x.contains(f));
    for (std::size_t i = 0; i < x.count(2); ++i) {
      EXPECT_EQ(x.index_of(x.faces(2)[i]), static_cast<long>(i));
    }
  }
}

TEST(SimplicialComplex, RestrictionKeepsUniverse) {
  const SimplicialComplex x = complete_complex(5, 2);
  const std::vector<Face> s = {Face{0, 1, 2}, Face{1, 2, 3}};
  const SimplicialComplex r = restriction(x, s);
  EXPECT_EQ(r.n_vertices(), 5);
  EXPECT_EQ(r.count(0), 4u);
  EXPECT_EQ(r.count(1), 5u);
  EXPECT_EQ(r.count(2), 2u);
  const std::vector<Face> bad = {Face{0, 1}};
  EXPECT_THROW(restriction(x, bad), ParameterError);
}

TEST(Example41, CanonicalCounts) {
  const Example41 ex = build_example_41();
  const SimplicialComplex& x = ex.complex;
  EXPECT_EQ(x.n_vertices(), 9);
  EXPECT_EQ(x.count(0), 9u);
  // Two K5 skeletons sharing an edge (19 edges), plus 6 apex edges and the
  // three matched pairs.
  EXPECT_EQ(x.count(1), 28u);
  // 9 triangles per copy plus 3 apex triangles.
  EXPECT_EQ(x.count(2), 21u);
  EXPECT_EQ(ex.z_triangles.size(), 18u);
  for (const Face& t : ex.z_triangles) EXPECT_FALSE(t.contains(ex.apex));
  EXPECT_TRUE(x.is_pure());
  EXPECT_FALSE(x.contains(Face{0, 1, 2}));
  EXPECT_FALSE(x.contains(Face{5, 6, 7}));
  EXPECT_TRUE(x.contains(Face{0, 5, 8}));
  EXPECT_TRUE(x.contains(Face{3, 4}));
}

TEST(ComplexJson, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const SimplicialComplex x = testing_support::random_pure_complex(6, 1 + trial % 3, 0.5, rng);
    EXPECT_EQ(parse_complex(dump_complex(x)), x);
  }
  const SimplicialComplex ex = build_example_41().complex;
  EXPECT_EQ(parse_complex(dump_complex(ex)), ex);
}

TEST(ComplexJson, RejectsMalformedInput) {
  EXPECT_THROW(parse_complex("not json"), ParseError);
  EXPECT_THROW(parse_complex(R"({"n": 4, "dim": 2, "facets": [[2, 1, 0]]})"), ParseError);
  EXPECT_THROW(parse_complex(R"({"n": 4, "dim": 1, "facets": [[0, 1, 2]]})"), ParseError);
  EXPECT_THROW(parse_complex(R"({"n": 2, "dim": 1, "facets": [[0, 5]]})"), ParseError);
  EXPECT_THROW(parse_complex(R"({"dim": 1, "facets": [[0, 1]]})"), ParseError);
  const SimplicialComplex x =
      parse_complex(R"({"n": 4, "dim": 2, "facets": [[0, 1, 2], [1, 2, 3]]})");
  EXPECT_EQ(x.count(1), 5u);
}

}  // namespace
}  // namespace volrig
