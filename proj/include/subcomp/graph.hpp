#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "subcomp/vertex_set.hpp"

namespace subcomp {

using Edge = std::pair<Vertex, Vertex>;

/**
 * Immutable simple undirected graph on vertices 0..n-1.
 *
 * Adjacency is held as one packed bit row per vertex, so neighborhood
 * algebra is word-parallel. Each vertex also carries a label: the vertex id
 * it had in the graph it was derived from (identity for freshly built
 * graphs). Equality compares adjacency only.
 */
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  /// Throws GraphError on an out-of-range endpoint or a self-loop.
  /// Duplicate edges (in either orientation) collapse.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Adopts prebuilt rows. Rows must already be symmetric and irreflexive.
  static auto from_rows(std::vector<VertexSet> rows, std::vector<Vertex> labels) -> Graph;

  auto order() const -> std::size_t { return n_; }
  auto edge_count() const -> std::size_t;

  auto adjacent(Vertex u, Vertex v) const -> bool { return rows_[u].contains(v); }
  auto neighbors(Vertex v) const -> const VertexSet& { return rows_[v]; }
  auto closed_neighbors(Vertex v) const -> VertexSet;
  auto degree(Vertex v) const -> std::size_t { return rows_[v].size(); }

  auto vertices() const -> VertexSet { return VertexSet::full(n_); }
  auto empty_set() const -> VertexSet { return VertexSet(n_); }

  /// All edges as (u, v) with u < v, in lexicographic order.
  auto edges() const -> std::vector<Edge>;

  auto label(Vertex v) const -> Vertex { return labels_[v]; }
  auto labels() const -> std::span<const Vertex> { return labels_; }

  friend auto operator==(const Graph& a, const Graph& b) -> bool {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> rows_;
  std::vector<Vertex> labels_;
};

auto build_graph(std::size_t n, std::span<const Edge> edges) -> Graph;

/// G ⊕ S: a pair inside S flips, every other pair is unchanged.
auto subgraph_complement(const Graph& g, const VertexSet& s) -> Graph;

auto complement(const Graph& g) -> Graph;

/// Vertices renumbered 0..|s|-1 in ascending order; labels follow the parent's.
auto induced_subgraph(const Graph& g, const VertexSet& s) -> Graph;

/// Throws GraphError for the empty graph.
auto min_degree(const Graph& g) -> std::size_t;
auto max_degree(const Graph& g) -> std::size_t;

/// Vacuously true for the empty graph.
auto has_min_degree_at_least(const Graph& g, std::size_t k) -> bool;

auto edges_within(const Graph& g, const VertexSet& s) -> std::size_t;
auto is_clique(const Graph& g, const VertexSet& s) -> bool;
auto is_independent(const Graph& g, const VertexSet& s) -> bool;

/// The four regions around an edge uv; together with {u, v} they cover V(G).
struct EdgeContext {
  Vertex u = 0;
  Vertex v = 0;
  VertexSet common;   // N(u) ∩ N(v)
  VertexSet u_only;   // N(u) \ N[v]
  VertexSet v_only;   // N(v) \ N[u]
  VertexSet neither;  // V \ (N[u] ∪ N[v])
};

/// Throws GraphError unless uv is an edge.
auto edge_context(const Graph& g, Vertex u, Vertex v) -> EdgeContext;

/// Each region of an EdgeContext split into its part inside S (ns_*) and
/// outside S (nt_*).
struct SolutionDissection {
  VertexSet ns_common;
  VertexSet ns_u_only;
  VertexSet ns_v_only;
  VertexSet ns_neither;
  VertexSet nt_common;
  VertexSet nt_u_only;
  VertexSet nt_v_only;
  VertexSet nt_neither;
};

/// Throws GraphError unless uv is an edge and u, v ∈ s.
auto dissect_solution(const Graph& g, const VertexSet& s, Vertex u, Vertex v) -> SolutionDissection;

}  // namespace subcomp
