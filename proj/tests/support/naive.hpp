#pragma once

// Test-only reference implementations. They work on plain adjacency
// matrices and enumerate subsets directly, sharing no code path with the
// library's bitset algorithms beyond the Graph accessors.

#include <bit>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "subcomp/graph.hpp"

namespace subcomp::naive {

using Matrix = std::vector<std::vector<bool>>;

inline auto matrix(const Graph& g) -> Matrix {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = 0; v < g.order(); ++v) m[u][v] = g.adjacent(u, v);
  return m;
}

inline auto from_matrix(const Matrix& m) -> Graph {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < m.size(); ++u)
    for (Vertex v = u + 1; v < m.size(); ++v)
      if (m[u][v]) edges.emplace_back(u, v);
  return Graph(m.size(), edges);
}

/// The defining rule: uv in G ⊕ S iff (uv ∉ E, u,v ∈ S) or (uv ∈ E, {u,v} ⊄ S).
inline auto complement_on(const Graph& g, std::uint64_t s) -> Graph {
  auto m = matrix(g);
  Matrix out = m;
  for (Vertex u = 0; u < m.size(); ++u)
    for (Vertex v = 0; v < m.size(); ++v) {
      if (u == v) continue;
      bool both = ((s >> u) & 1) && ((s >> v) & 1);
      out[u][v] = both ? !m[u][v] : m[u][v];
    }
  return from_matrix(out);
}

inline auto mask_of(const VertexSet& s) -> std::uint64_t {
  std::uint64_t mask = 0;
  for (auto v : s) mask |= std::uint64_t{1} << v;
  return mask;
}

inline auto members(std::uint64_t mask) -> std::vector<Vertex> {
  std::vector<Vertex> out;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1) out.push_back(v);
  return out;
}

inline auto edges_in(const Graph& g, std::uint64_t mask) -> std::size_t {
  auto vs = members(mask);
  std::size_t count = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) count += g.adjacent(vs[i], vs[j]);
  return count;
}

inline void for_each_subset_of_size(std::size_t n, std::size_t size, const std::function<void(std::uint64_t)>& f) {
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
    if (static_cast<std::size_t>(std::popcount(mask)) == size) f(mask);
}

inline auto has_induced_diamond(const Graph& g) -> bool {
  bool found = false;
  for_each_subset_of_size(g.order(), 4, [&](std::uint64_t m) { found = found || edges_in(g, m) == 5; });
  return found;
}

inline auto diamond_bases(const Graph& g) -> std::uint64_t {
  std::uint64_t bases = 0;
  for_each_subset_of_size(g.order(), 4, [&](std::uint64_t m) {
    if (edges_in(g, m) != 5) return;
    auto vs = members(m);
    for (auto a : vs)
      for (auto b : vs)
        if (a < b && !g.adjacent(a, b)) bases |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
  });
  return bases;
}

/// Some (t+1)-subset induces a star: one vertex adjacent to all others, no other edges.
inline auto has_induced_star(const Graph& g, std::size_t t) -> bool {
  bool found = false;
  for_each_subset_of_size(g.order(), t + 1, [&](std::uint64_t m) {
    if (found || edges_in(g, m) != t) return;
    for (auto c : members(m)) {
      std::size_t deg = 0;
      for (auto x : members(m)) deg += g.adjacent(c, x);
      if (deg == t) found = true;
    }
  });
  return found;
}

inline auto is_member(const Graph& g, std::size_t t) -> bool { return !naive::has_induced_diamond(g) && !naive::has_induced_star(g, t); }

inline auto clique_number(const Graph& g, std::uint64_t within) -> std::size_t {
  std::size_t best = 0;
  for (std::uint64_t m = within;; m = (m - 1) & within) {
    auto size = static_cast<std::size_t>(std::popcount(m));
    if (size > best && edges_in(g, m) == size * (size - 1) / 2) best = size;
    if (m == 0) break;
  }
  return best;
}

inline auto independence_number(const Graph& g, std::uint64_t within) -> std::size_t {
  std::size_t best = 0;
  for (std::uint64_t m = within;; m = (m - 1) & within) {
    auto size = static_cast<std::size_t>(std::popcount(m));
    if (size > best && edges_in(g, m) == 0) best = size;
    if (m == 0) break;
  }
  return best;
}

/// Every P ⊆ V with ω(G[P]) <= p and α(G[V \ P]) <= q, ascending by mask.
/// Subset tables: big_clique[m] says G[m] contains a K_{p+1}, big_indep[m]
/// that it contains q+1 independent vertices.
inline auto split_partitions(const Graph& g, std::size_t p, std::size_t q) -> std::vector<std::uint64_t> {
  const auto n = g.order();
  const std::uint64_t count = std::uint64_t{1} << n;
  std::vector<std::uint64_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w = 0; w < n; ++w)
      if (g.adjacent(v, w)) adj[v] |= std::uint64_t{1} << w;

  std::vector<bool> clique(count), indep(count), big_clique(count), big_indep(count);
  clique[0] = indep[0] = true;
  for (std::uint64_t m = 1; m < count; ++m) {
    auto low = static_cast<Vertex>(std::countr_zero(m));
    auto rest = m & (m - 1);
    clique[m] = clique[rest] && (adj[low] & rest) == rest;
    indep[m] = indep[rest] && (adj[low] & rest) == 0;
    auto size = static_cast<std::size_t>(std::popcount(m));
    bool bc = size == p + 1 && clique[m];
    bool bi = size == q + 1 && indep[m];
    for (std::uint64_t r = m; r && !(bc && bi); r &= r - 1) {
      auto without = m & ~(r & -r);
      bc = bc || big_clique[without];
      bi = bi || big_indep[without];
    }
    big_clique[m] = bc;
    big_indep[m] = bi;
  }

  std::vector<std::uint64_t> out;
  for (std::uint64_t pm = 0; pm < count; ++pm)
    if (!big_clique[pm] && !big_indep[(count - 1) & ~pm]) out.push_back(pm);
  return out;
}

/// Every labeled simple graph on n vertices (2^(n choose 2) of them).
inline void for_each_labeled_graph(std::size_t n, const std::function<void(const Graph&)>& f) {
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs.size()); ++code) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if ((code >> b) & 1) edges.emplace_back(pairs[b]);
    f(Graph(n, edges));
  }
}

/// Any S ⊆ V (no pruning) with δ(G ⊕ S) >= k.
inline auto min_degree_solvable(const Graph& g, std::size_t k) -> bool {
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
    auto h = complement_on(g, s);
    bool ok = true;
    for (Vertex v = 0; v < h.order(); ++v) ok = ok && h.degree(v) >= k;
    if (ok) return true;
  }
  return false;
}

inline auto random_subset(std::size_t n, std::mt19937_64& rng) -> VertexSet {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (rng() & 1) s.insert(v);
  return s;
}

}  // namespace subcomp::naive
