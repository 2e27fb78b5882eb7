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

#ifndef VOLRIG_COMPLEX_HPP_
#define VOLRIG_COMPLEX_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace volrig {

using Vertex = int;

// A face of a simplicial complex, stored as a strictly increasing vertex list.
class Face {
 public:
  Face() = default;
  // Sorts the input; throws ParameterError on duplicates or negative ids.
  explicit Face(std::vector<Vertex> vertices);
  Face(std::initializer_list<Vertex> vertices);

  int dim() const { return static_cast<int>(vertices_.size()) - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool contains(Vertex v) const;
  bool is_subset_of(const Face& other) const;
  // Position of v within the face, or -1.
  int index_of(Vertex v) const;
  Face without(Vertex v) const;
  Face with(Vertex v) const;

  std::string to_string() const;

  friend auto operator<=>(const Face&, const Face&) = default;
  friend bool operator==(const Face&, const Face&) = default;

 private:
  std::vector<Vertex> vertices_;
};

using Edge = Face;

// Graph on vertices 0..n_vertices-1 with a sorted, duplicate-free edge list.
struct Graph {
  int n_vertices = 0;
  std::vector<Edge> edges;

  // Number of vertices incident to at least one edge.
  int touched_vertices() const;
};

// Immutable simplicial complex over the vertex universe 0..n_vertices-1.
//
// Faces are kept per dimension in lexicographic order. Constructors from
// facets put every universe vertex into X_0; link() and restriction() can
// produce complexes whose X_0 is a proper subset of the universe.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  int n_vertices() const { return n_vertices_; }
  // -1 for the empty complex.
  int dim() const { return static_cast<int>(faces_.size()) - 1; }

  const std::vector<Face>& faces(int i) const;
  std::size_t count(int i) const { return faces(i).size(); }
  bool contains(const Face& f) const;
  // Row/column index of f among faces of its dimension, or -1.
  long index_of(const Face& f) const;

  // Inclusion-maximal faces, lexicographic within dimension, descending dim.
  std::vector<Face> facets() const;
  // Every face of dimension >= 1 lies in some top-dimensional face.
  bool is_pure() const;
  // Every stored face's subsets are stored (exhaustive check).
  bool is_downward_closed() const;

  friend bool operator==(const SimplicialComplex& a,
                         const SimplicialComplex& b) {
    return a.n_vertices_ == b.n_vertices_ && a.faces_ == b.faces_;
  }

  // Downward closure of `generators` over the universe 0..n-1. When
  // `include_all_vertices` is set every universe vertex is a 0-face.
  static SimplicialComplex closure(int n, std::span<const Face> generators,
                                   bool include_all_vertices);

 private:
  int n_vertices_ = 0;
  std::vector<std::vector<Face>> faces_;
  std::vector<std::map<Face, long>> index_;
};

// Delta_{n,k}: all subsets of size <= k+1 of n vertices.
SimplicialComplex complete_complex(int n, int k);

// Downward closure of `facets`; every vertex 0..n-1 is a 0-face.
SimplicialComplex from_facets(int n, std::span<const Face> facets);

// Maps vertex u != v to its id after removing v from the universe.
inline Vertex compact_vertex(Vertex u, Vertex v) { return u > v ? u - 1 : u; }

// Faces sigma \ {v} over all faces sigma containing v, on the universe with v
// removed (ids above v shift down by one).
SimplicialComplex link(const SimplicialComplex& x, Vertex v);

// All faces not containing v, with the same relabeling as link().
SimplicialComplex delete_vertex(const SimplicialComplex& x, Vertex v);

// X[S]: downward closure of a set of top-dimensional faces. Keeps the
// universe of `x`, so vertices outside S become absent from X_0.
SimplicialComplex restriction(const SimplicialComplex& x,
                              std::span<const Face> top_faces);

Graph one_skeleton(const SimplicialComplex& x);

// The glued complex used in the volume-rigidity counterexample: two copies of
// Delta_{5,2} minus a triangle, glued along an edge, plus an apex vertex
// joined to three matched vertex pairs.
struct Example41 {
  SimplicialComplex complex;
  // Triangles not containing the apex.
  std::vector<Face> z_triangles;
  std::map<std::string, Vertex> labels;  // a b c a' b' c' v
  Vertex apex = 8;
};

Example41 build_example_41();

// All k-subsets of {0..n-1} in lexicographic order.
std::vector<Face> subsets(int n, int size);

long long binomial(int n, int k);

}  // namespace volrig

#endif  // VOLRIG_COMPLEX_HPP_
