#pragma once

#include <cstddef>
#include <optional>
#include <utility>

#include "subcomp/graph.hpp"

namespace subcomp {

/// An induced diamond: apexes adjacent to everything, base pair nonadjacent.
struct DiamondWitness {
  std::pair<Vertex, Vertex> apexes;
  std::pair<Vertex, Vertex> base;

  friend auto operator==(const DiamondWitness&, const DiamondWitness&) -> bool = default;
};

/// A K1,t center r together with the isolated vertices of G[N(r)].
struct StarCenterContext {
  Vertex center = 0;
  VertexSet isolated;
};

/// A clique of exactly `size` vertices inside `within`, if any. Search is
/// ascending-index branching, so the result is deterministic.
auto find_clique(const Graph& g, const VertexSet& within, std::size_t size) -> std::optional<VertexSet>;

/// An independent set of exactly `size` vertices inside `within`, if any.
auto find_independent_set(const Graph& g, const VertexSet& within, std::size_t size) -> std::optional<VertexSet>;

/// Least witness in the order (apexes, base), both pairs ascending.
auto find_induced_diamond(const Graph& g) -> std::optional<DiamondWitness>;

/// Union of the base pairs of all induced diamonds.
auto diamond_degree2_vertices(const Graph& g) -> VertexSet;

/// Vertices whose neighborhood holds an independent set of size t.
auto star_centers(const Graph& g, std::size_t t) -> VertexSet;

/// Early-exit form of !star_centers(g, t).empty().
auto has_induced_star(const Graph& g, std::size_t t) -> bool;

/// {K1,t, diamond}-free. Throws std::invalid_argument for t < 3.
auto is_target_class_member(const Graph& g, std::size_t t) -> bool;

/// Vertices of N(r) with no neighbor inside N(r).
auto isolated_in_neighborhood(const Graph& g, Vertex r) -> VertexSet;

/// Least-index star center and its isolated neighbors, if G has an induced K1,t.
auto star_center_context(const Graph& g, std::size_t t) -> std::optional<StarCenterContext>;

/// Scans `within` in ascending order, keeping each vertex that has no
/// neighbor among those already kept.
auto greedy_maximal_independent_set(const Graph& g, const VertexSet& within) -> VertexSet;

}  // namespace subcomp
