#pragma once

#include <cstddef>
#include <vector>

#include "subcomp/graph.hpp"

namespace subcomp {

/// An ordered partition (P, Q) of a ground set with ω(G[P]) <= p and
/// α(G[Q]) <= q.
struct SplitPartition {
  VertexSet p_side;
  VertexSet q_side;
  std::size_t p = 0;
  std::size_t q = 0;

  friend auto operator==(const SplitPartition&, const SplitPartition&) -> bool = default;
};

/// A subset `indep` of the ground set that is independent with at most t-1
/// vertices, paired with the remainder.
struct IndependentRestPartition {
  VertexSet rest;
  VertexSet indep;

  friend auto operator==(const IndependentRestPartition&, const IndependentRestPartition&) -> bool = default;
};

auto clique_number_at_most(const Graph& g, std::size_t bound) -> bool;
auto clique_number_at_most(const Graph& g, const VertexSet& within, std::size_t bound) -> bool;
auto independence_number_at_most(const Graph& g, std::size_t bound) -> bool;
auto independence_number_at_most(const Graph& g, const VertexSet& within, std::size_t bound) -> bool;

/// Checks the SplitPartition invariants against `ground`.
auto is_valid_split_partition(const Graph& g, const VertexSet& ground, const SplitPartition& part) -> bool;

/**
 * Every (p,q)-split partition of G[ground], sorted lexicographically by P.
 * Empty iff G[ground] is not (p,q)-split; an empty ground set yields the
 * single partition (∅, ∅). Throws std::invalid_argument if p or q is 0.
 *
 * Works by branching on violations. While P ∪ U (U = unassigned) contains a
 * K_{p+1}, one of its unassigned members must go to Q; the branches are
 * "the i-th unassigned member goes to Q, the earlier ones to P", which are
 * pairwise disjoint. The same holds symmetrically for a (q+1)-independent
 * set in Q ∪ U. Once neither exists, every completion of U is valid.
 */
auto enumerate_pq_split_partitions(const Graph& g, const VertexSet& ground, std::size_t p, std::size_t q)
    -> std::vector<SplitPartition>;
auto enumerate_pq_split_partitions(const Graph& g, std::size_t p, std::size_t q) -> std::vector<SplitPartition>;

/// One entry per independent subset of `ground` with at most t-1 vertices,
/// ordered by size then lexicographically. Throws for t < 3.
auto enumerate_independent_rest_partitions(const Graph& g, const VertexSet& ground, std::size_t t)
    -> std::vector<IndependentRestPartition>;
auto enumerate_independent_rest_partitions(const Graph& g, std::size_t t) -> std::vector<IndependentRestPartition>;

}  // namespace subcomp
