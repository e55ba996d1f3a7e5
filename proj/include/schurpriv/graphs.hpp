// Copyright 2026 The schurpriv Authors
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


#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace schurpriv {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

inline constexpr std::size_t kDefaultSearchCap = 64;
inline constexpr std::size_t kDefaultGraphCap = 4096;

// Simple undirected graph on vertices 0..n-1, stored as adjacency bit rows.
class Graph {
 public:
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  static Graph complete(std::size_t n);
  static Graph cycle(std::size_t n);
  static Graph path(std::size_t n);

  std::size_t size() const noexcept { return rows_.size(); }
  bool has_edge(std::size_t i, std::size_t j) const { return rows_.at(i).test(j); }
  const VertexSet& neighbors(std::size_t v) const { return rows_.at(v); }
  std::size_t degree(std::size_t v) const { return rows_.at(v).count(); }
  std::size_t edge_count() const;
  // Edges (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  // Throws ArgumentError on self-loops or out-of-range vertices.
  void add_edge(std::size_t i, std::size_t j);

  Graph complement() const;
  Graph induced(const std::vector<std::size_t>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.rows_ == b.rows_; }

 private:
  std::vector<VertexSet> rows_;
};

// Disjoint union; vertices of b are shifted by a.size().
Graph disjoint_union(const Graph& a, const Graph& b);

// Maximal connected vertex sets, each sorted, listed by least element.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

// Vertex (i, j) ↦ i·|h| + j, matching kron's ordering.
Graph strong_product(const Graph& g, const Graph& h, std::size_t max_vertices = kDefaultGraphCap);

// g ⊠ g ⊠ ... ⊠ g (k factors), built iteratively.
Graph strong_power(const Graph& g, std::size_t k, std::size_t max_vertices = kDefaultGraphCap);

struct IndependentSet {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // sorted, lexicographically least among maxima
};

// Exact α(g) via branch-and-bound max clique on the complement with a greedy
// colouring bound. Throws CapacityError when g.size() > cap.
IndependentSet independence_number(const Graph& g, std::size_t cap = kDefaultSearchCap);

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices);

// Complete every connected component into a clique.
Graph star_closure(const Graph& g);

bool is_disjoint_cliques(const Graph& g);

struct ShannonBound {
  double value = 0.0;       // max_k α(g^⊠k)^{1/k}
  std::size_t best_power = 1;
  std::vector<std::size_t> alphas;  // α(g^⊠k) for k = 1..kmax
};

// Certified lower bound on the Shannon capacity from strong powers 1..kmax.
ShannonBound shannon_lower(const Graph& g, std::size_t kmax, std::size_t cap = kDefaultSearchCap);

}  // namespace schurpriv
