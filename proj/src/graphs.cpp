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


#include "schurpriv/graphs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "schurpriv/errors.hpp"

namespace schurpriv {
namespace {

// Branch-and-bound maximum clique with greedy colouring bounds (MCQ style).
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<VertexSet>& adj) : adj_(adj) {}

  // Largest clique inside `candidates` that beats `floor`; the search stops as
  // soon as a clique of size `stop_at` is found. Returns the best size seen
  // (== floor when nothing larger exists).
  std::size_t run(const VertexSet& candidates, std::size_t floor, std::size_t stop_at) {
    best_size_ = floor;
    best_.clear();
    current_.clear();
    stop_at_ = stop_at;
    if (candidates.any() && floor < stop_at) expand(candidates);
    return best_size_;
  }

  const std::vector<std::size_t>& best() const { return best_; }

 private:
  void expand(VertexSet p) {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    order.reserve(p.count());
    colour.reserve(p.count());
    VertexSet uncoloured = p;
    std::size_t k = 0;
    while (uncoloured.any()) {
      ++k;
      VertexSet q = uncoloured;
      for (auto v = q.find_first(); v != VertexSet::npos; v = q.find_next(v)) {
        uncoloured.reset(v);
        q -= adj_[v];
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_size_) return;
      const std::size_t v = order[i];
      current_.push_back(v);
      VertexSet next = p & adj_[v];
      if (next.none()) {
        if (current_.size() > best_size_) {
          best_size_ = current_.size();
          best_ = current_;
        }
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      if (best_size_ >= stop_at_) return;
      p.reset(v);
    }
  }

  const std::vector<VertexSet>& adj_;
  std::vector<std::size_t> current_;
  std::vector<std::size_t> best_;
  std::size_t best_size_ = 0;
  std::size_t stop_at_ = 0;
};

void check_vertex(std::size_t v, std::size_t n) {
  if (v >= n) {
    throw ArgumentError("graph: vertex " + std::to_string(v) + " out of range for n=" +
                        std::to_string(n));
  }
}

}  // namespace

Graph::Graph(std::size_t n) : rows_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Graph(n) {
  for (const auto& [i, j] : edges) add_edge(i, j);
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.rows_[i].set();
    g.rows_[i].reset(i);
  }
  return g;
}

Graph Graph::cycle(std::size_t n) {
  Graph g(n);
  if (n < 3) throw ArgumentError("Graph::cycle: need at least 3 vertices");
  for (std::size_t i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph Graph::path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.count();
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (auto j = rows_[i].find_next(i); j != VertexSet::npos; j = rows_[i].find_next(j)) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

void Graph::add_edge(std::size_t i, std::size_t j) {
  check_vertex(i, size());
  check_vertex(j, size());
  if (i == j) throw ArgumentError("graph: self-loop at vertex " + std::to_string(i));
  rows_[i].set(j);
  rows_[j].set(i);
}

Graph Graph::complement() const {
  Graph g(size());
  for (std::size_t i = 0; i < size(); ++i) {
    g.rows_[i] = ~rows_[i];
    g.rows_[i].reset(i);
  }
  return g;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph g(vertices.size());
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    check_vertex(vertices[s], size());
    for (std::size_t t = s + 1; t < vertices.size(); ++t) {
      if (has_edge(vertices[s], vertices[t])) g.add_edge(s, t);
    }
  }
  return g;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.size() + b.size());
  for (const auto& [i, j] : a.edges()) g.add_edge(i, j);
  for (const auto& [i, j] : b.edges()) g.add_edge(a.size() + i, a.size() + j);
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> out;
  VertexSet unseen(n);
  unseen.set();
  for (auto start = unseen.find_first(); start != VertexSet::npos; start = unseen.find_first()) {
    VertexSet comp(n);
    VertexSet frontier(n);
    frontier.set(start);
    while (frontier.any()) {
      comp |= frontier;
      VertexSet next(n);
      for (auto v = frontier.find_first(); v != VertexSet::npos; v = frontier.find_next(v)) {
        next |= g.neighbors(v);
      }
      frontier = next - comp;
    }
    unseen -= comp;
    std::vector<std::size_t> members;
    members.reserve(comp.count());
    for (auto v = comp.find_first(); v != VertexSet::npos; v = comp.find_next(v)) {
      members.push_back(v);
    }
    out.push_back(std::move(members));
  }
  return out;
}

Graph strong_product(const Graph& g, const Graph& h, std::size_t max_vertices) {
  const std::size_t ng = g.size();
  const std::size_t nh = h.size();
  if (ng != 0 && nh > max_vertices / ng) {
    throw CapacityError("strong_product: " + std::to_string(ng) + "x" + std::to_string(nh) +
                        " vertices exceeds cap " + std::to_string(max_vertices));
  }
  Graph out(ng * nh);
  auto closed = [](const Graph& x, std::size_t v) {
    VertexSet s = x.neighbors(v);
    s.set(v);
    return s;
  };
  for (std::size_t i = 0; i < ng; ++i) {
    const VertexSet gi = closed(g, i);
    for (std::size_t j = 0; j < nh; ++j) {
      const VertexSet hj = closed(h, j);
      const std::size_t u = i * nh + j;
      for (auto k = gi.find_first(); k != VertexSet::npos; k = gi.find_next(k)) {
        for (auto l = hj.find_first(); l != VertexSet::npos; l = hj.find_next(l)) {
          const std::size_t w = k * nh + l;
          if (w > u) out.add_edge(u, w);
        }
      }
    }
  }
  return out;
}

Graph strong_power(const Graph& g, std::size_t k, std::size_t max_vertices) {
  if (k == 0) throw ArgumentError("strong_power: power must be >= 1");
  Graph acc = g;
  for (std::size_t p = 1; p < k; ++p) acc = strong_product(acc, g, max_vertices);
  return acc;
}

IndependentSet independence_number(const Graph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap) {
    throw CapacityError("independence_number: " + std::to_string(n) +
                        " vertices exceeds exact-search cap " + std::to_string(cap) +
                        "; raise the cap or fall back to bounds");
  }
  IndependentSet result;
  if (n == 0) return result;

  std::vector<VertexSet> comp(n);
  for (std::size_t v = 0; v < n; ++v) {
    comp[v] = ~g.neighbors(v);
    comp[v].reset(v);
  }
  CliqueSearch search(comp);
  VertexSet all(n);
  all.set();
  const std::size_t alpha = search.run(all, 0, std::numeric_limits<std::size_t>::max());

  // Greedy over vertices in increasing order: keep v iff a maximum independent
  // set extending the current prefix through v still exists.
  VertexSet candidates = all;
  for (std::size_t v = 0; v < n && result.witness.size() < alpha; ++v) {
    if (!candidates.test(v)) continue;
    const std::size_t need = alpha - result.witness.size();
    VertexSet rest = candidates & comp[v];
    for (std::size_t u = 0; u <= v; ++u) rest.reset(u);
    bool feasible = need == 1;
    if (!feasible && rest.count() >= need - 1) {
      feasible = search.run(rest, need - 2, need - 1) >= need - 1;
    }
    if (feasible) {
      result.witness.push_back(v);
      candidates = rest;
    } else {
      candidates.reset(v);
    }
  }
  result.size = alpha;
  if (result.witness.size() != alpha) {
    throw InternalError("independence_number: witness reconstruction failed");
  }
  return result;
}

bool is_independent(const Graph& g, const std::vector<std::size_t>& vertices) {
  for (std::size_t s = 0; s < vertices.size(); ++s) {
    for (std::size_t t = s + 1; t < vertices.size(); ++t) {
      if (vertices[s] == vertices[t] || g.has_edge(vertices[s], vertices[t])) return false;
    }
  }
  return true;
}

Graph star_closure(const Graph& g) {
  Graph out(g.size());
  for (const auto& comp : connected_components(g)) {
    for (std::size_t s = 0; s < comp.size(); ++s) {
      for (std::size_t t = s + 1; t < comp.size(); ++t) out.add_edge(comp[s], comp[t]);
    }
  }
  return out;
}

bool is_disjoint_cliques(const Graph& g) { return g == star_closure(g); }

ShannonBound shannon_lower(const Graph& g, std::size_t kmax, std::size_t cap) {
  if (kmax == 0) throw ArgumentError("shannon_lower: kmax must be >= 1");
  ShannonBound out;
  Graph power = g;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (k > 1) power = strong_product(power, g, std::max(cap, kDefaultGraphCap));
    if (power.size() > cap) {
      throw CapacityError("shannon_lower: strong power " + std::to_string(k) + " has " +
                          std::to_string(power.size()) + " vertices, above cap " +
                          std::to_string(cap));
    }
    const std::size_t alpha = independence_number(power, cap).size;
    out.alphas.push_back(alpha);
    const double value = std::pow(static_cast<double>(alpha), 1.0 / static_cast<double>(k));
    if (value > out.value + 1e-12) {
      out.value = value;
      out.best_power = k;
    }
  }
  return out;
}

}  // namespace schurpriv
