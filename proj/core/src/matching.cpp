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

#include <limits>
#include <queue>

#include "volrig/matroid_matching.hpp"

namespace volrig {

std::size_t IncidenceGraph::edge_count() const {
  std::size_t m = 0;
  for (const auto& nbrs : adjacency) m += nbrs.size();
  return m;
}

IncidenceGraph IncidenceGraph::restrict_left(
    std::span<const std::size_t> keep) const {
  IncidenceGraph h;
  h.right = right;
  for (std::size_t i : keep) {
    h.left.push_back(left.at(i));
    h.adjacency.push_back(adjacency.at(i));
  }
  return h;
}

IncidenceGraph incidence_graph(const std::vector<Face>& a,
                               const std::vector<Face>& b) {
  IncidenceGraph h;
  h.left = a;
  h.right = b;
  h.adjacency.resize(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i].is_subset_of(b[j])) h.adjacency[i].push_back(static_cast<int>(j));
    }
  }
  return h;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

class HopcroftKarp {
 public:
  explicit HopcroftKarp(const IncidenceGraph& h)
      : h_(h),
        mate_l_(h.left.size(), -1),
        mate_r_(h.right.size(), -1),
        dist_(h.left.size()) {}

  Matching run() {
    int size = 0;
    while (bfs()) {
      for (std::size_t u = 0; u < h_.left.size(); ++u) {
        if (mate_l_[u] == -1 && dfs(static_cast<int>(u))) ++size;
      }
    }
    return Matching{size, mate_l_, mate_r_};
  }

 private:
  bool bfs() {
    std::queue<int> q;
    bool found = false;
    for (std::size_t u = 0; u < h_.left.size(); ++u) {
      if (mate_l_[u] == -1) {
        dist_[u] = 0;
        q.push(static_cast<int>(u));
      } else {
        dist_[u] = kInf;
      }
    }
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : h_.adjacency[u]) {
        const int w = mate_r_[v];
        if (w == -1) {
          found = true;
        } else if (dist_[w] == kInf) {
          dist_[w] = dist_[u] + 1;
          q.push(w);
        }
      }
    }
    return found;
  }

  bool dfs(int u) {
    for (int v : h_.adjacency[u]) {
      const int w = mate_r_[v];
      if (w == -1 || (dist_[w] == dist_[u] + 1 && dfs(w))) {
        mate_l_[u] = v;
        mate_r_[v] = u;
        return true;
      }
    }
    dist_[u] = kInf;
    return false;
  }

  const IncidenceGraph& h_;
  std::vector<int> mate_l_;
  std::vector<int> mate_r_;
  std::vector<int> dist_;
};

}  // namespace

Matching maximum_matching(const IncidenceGraph& h) {
  return HopcroftKarp(h).run();
}

int matching_number(const IncidenceGraph& h) { return maximum_matching(h).size; }

std::size_t TransversalOracle::rank(std::span<const std::size_t> subset) const {
  return static_cast<std::size_t>(matching_number(h_.restrict_left(subset)));
}

}  // namespace volrig
