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

#include "volrig/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "volrig/errors.hpp"

namespace volrig {

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) !=
      vertices_.end()) {
    throw ParameterError("face has a repeated vertex: " + to_string());
  }
  if (!vertices_.empty() && vertices_.front() < 0) {
    throw ParameterError("negative vertex id in face " + to_string());
  }
}

Face::Face(std::initializer_list<Vertex> vertices)
    : Face(std::vector<Vertex>(vertices)) {}

bool Face::contains(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

int Face::index_of(Vertex v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return -1;
  return static_cast<int>(it - vertices_.begin());
}

Face Face::without(Vertex v) const {
  Face out;
  out.vertices_.reserve(vertices_.size());
  for (Vertex u : vertices_) {
    if (u != v) out.vertices_.push_back(u);
  }
  return out;
}

Face Face::with(Vertex v) const {
  std::vector<Vertex> vs = vertices_;
  vs.push_back(v);
  return Face(std::move(vs));
}

std::string Face::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) os << ',';
    os << vertices_[i];
  }
  os << '}';
  return os.str();
}

int Graph::touched_vertices() const {
  std::set<Vertex> seen;
  for (const Edge& e : edges) seen.insert(e.begin(), e.end());
  return static_cast<int>(seen.size());
}

namespace {

const std::vector<Face> kNoFaces;

// Calls fn on every nonempty subset of f (including f itself).
template <typename Fn>
void for_each_nonempty_subset(const Face& f, Fn&& fn) {
  const auto& vs = f.vertices();
  const std::size_t m = vs.size();
  // Faces here have at most a few dozen vertices; anything larger would not
  // fit the dense matrices downstream anyway.
  if (m >= 31) throw ParameterError("face too large: " + f.to_string());
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<Vertex> sub;
    for (std::size_t i = 0; i < m; ++i) {
      if (mask & (1u << i)) sub.push_back(vs[i]);
    }
    fn(Face(std::move(sub)));
  }
}

}  // namespace

const std::vector<Face>& SimplicialComplex::faces(int i) const {
  if (i < 0 || i >= static_cast<int>(faces_.size())) return kNoFaces;
  return faces_[i];
}

bool SimplicialComplex::contains(const Face& f) const {
  return index_of(f) >= 0;
}

long SimplicialComplex::index_of(const Face& f) const {
  const int i = f.dim();
  if (i < 0 || i >= static_cast<int>(index_.size())) return -1;
  auto it = index_[i].find(f);
  return it == index_[i].end() ? -1 : it->second;
}

SimplicialComplex SimplicialComplex::closure(
    int n, std::span<const Face> generators, bool include_all_vertices) {
  if (n < 0) throw ParameterError("negative vertex count");
  std::vector<std::set<Face>> by_dim;
  auto insert = [&](Face f) {
    const int i = f.dim();
    if (static_cast<int>(by_dim.size()) <= i) by_dim.resize(i + 1);
    by_dim[i].insert(std::move(f));
  };
  if (include_all_vertices) {
    for (Vertex v = 0; v < n; ++v) insert(Face{v});
  }
  for (const Face& g : generators) {
    if (g.empty()) continue;
    if (g.vertices().back() >= n) {
      throw ParameterError("vertex out of range in face " + g.to_string());
    }
    for_each_nonempty_subset(g, insert);
  }
  SimplicialComplex x;
  x.n_vertices_ = n;
  x.faces_.resize(by_dim.size());
  x.index_.resize(by_dim.size());
  for (std::size_t i = 0; i < by_dim.size(); ++i) {
    x.faces_[i].assign(by_dim[i].begin(), by_dim[i].end());
    for (std::size_t j = 0; j < x.faces_[i].size(); ++j) {
      x.index_[i].emplace(x.faces_[i][j], static_cast<long>(j));
    }
  }
  return x;
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (int i = dim(); i >= 0; --i) {
    for (const Face& f : faces_[i]) {
      bool maximal = true;
      if (i + 1 <= dim()) {
        for (Vertex v = 0; v < n_vertices_ && maximal; ++v) {
          if (!f.contains(v) && contains(f.with(v))) maximal = false;
        }
      }
      if (maximal) out.push_back(f);
    }
  }
  return out;
}

bool SimplicialComplex::is_pure() const {
  const int k = dim();
  if (k < 1) return true;
  for (int i = 1; i < k; ++i) {
    for (const Face& f : faces_[i]) {
      bool covered = false;
      for (const Face& top : faces_[k]) {
        if (f.is_subset_of(top)) {
          covered = true;
          break;
        }
      }
      if (!covered) return false;
    }
  }
  return true;
}

bool SimplicialComplex::is_downward_closed() const {
  for (const auto& layer : faces_) {
    for (const Face& f : layer) {
      bool ok = true;
      for_each_nonempty_subset(f, [&](const Face& s) {
        if (!contains(s)) ok = false;
      });
      if (!ok) return false;
    }
  }
  return true;
}

SimplicialComplex complete_complex(int n, int k) {
  if (k < 0 || k >= n) {
    throw ParameterError("complete complex needs 0 <= k <= n-1");
  }
  const std::vector<Face> tops = subsets(n, k + 1);
  return SimplicialComplex::closure(n, tops, true);
}

SimplicialComplex from_facets(int n, std::span<const Face> facets) {
  if (facets.empty()) throw ParameterError("empty facet list");
  return SimplicialComplex::closure(n, facets, true);
}

namespace {

void require_vertex(const SimplicialComplex& x, Vertex v) {
  if (v < 0 || v >= x.n_vertices() || !x.contains(Face{v})) {
    throw ParameterError("vertex " + std::to_string(v) + " not in complex");
  }
}

Face compact_face(const Face& f, Vertex v) {
  std::vector<Vertex> vs;
  vs.reserve(f.size());
  for (Vertex u : f) vs.push_back(compact_vertex(u, v));
  return Face(std::move(vs));
}

}  // namespace

SimplicialComplex link(const SimplicialComplex& x, Vertex v) {
  require_vertex(x, v);
  std::vector<Face> gens;
  for (int i = 1; i <= x.dim(); ++i) {
    for (const Face& f : x.faces(i)) {
      if (f.contains(v)) gens.push_back(compact_face(f.without(v), v));
    }
  }
  return SimplicialComplex::closure(x.n_vertices() - 1, gens, false);
}

SimplicialComplex delete_vertex(const SimplicialComplex& x, Vertex v) {
  require_vertex(x, v);
  std::vector<Face> gens;
  for (int i = 0; i <= x.dim(); ++i) {
    for (const Face& f : x.faces(i)) {
      if (!f.contains(v)) gens.push_back(compact_face(f, v));
    }
  }
  return SimplicialComplex::closure(x.n_vertices() - 1, gens, false);
}

SimplicialComplex restriction(const SimplicialComplex& x,
                              std::span<const Face> top_faces) {
  const int k = x.dim();
  for (const Face& f : top_faces) {
    if (f.dim() != k || !x.contains(f)) {
      throw ParameterError("restriction: " + f.to_string() +
                           " is not a top-dimensional face");
    }
  }
  return SimplicialComplex::closure(x.n_vertices(), top_faces, false);
}

Graph one_skeleton(const SimplicialComplex& x) {
  return Graph{x.n_vertices(), x.faces(1)};
}

Example41 build_example_41() {
  std::vector<Face> tri;
  // Copy 1 on {0..4} without {0,1,2}; copy 2 on {3..7} without {5,6,7}.
  for (const Face& t : subsets(5, 3)) {
    if (t != Face{0, 1, 2}) tri.push_back(t);
  }
  for (const Face& t : subsets(5, 3)) {
    Face shifted({t[0] + 3, t[1] + 3, t[2] + 3});
    if (shifted != Face{5, 6, 7}) tri.push_back(shifted);
  }
  Example41 ex;
  ex.z_triangles = tri;
  std::sort(ex.z_triangles.begin(), ex.z_triangles.end());
  tri.push_back(Face{0, 5, 8});
  tri.push_back(Face{1, 6, 8});
  tri.push_back(Face{2, 7, 8});
  ex.complex = from_facets(9, tri);
  ex.labels = {{"a", 0}, {"b", 1}, {"c", 2}, {"a'", 5},
               {"b'", 6}, {"c'", 7}, {"v", 8}};
  return ex;
}

std::vector<Face> subsets(int n, int size) {
  std::vector<Face> out;
  if (size < 0 || size > n) return out;
  std::vector<Vertex> cur(size);
  for (int i = 0; i < size; ++i) cur[i] = i;
  while (true) {
    out.emplace_back(cur);
    int i = size - 1;
    while (i >= 0 && cur[i] == n - size + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace volrig
