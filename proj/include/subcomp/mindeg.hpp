#pragma once

#include <cstddef>
#include <cstdint>

#include "subcomp/graph.hpp"
#include "subcomp/verdict.hpp"

namespace subcomp::mindeg {

/// Subsets the exhaustive solver may sweep before refusing.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// A graph together with the target minimum degree k >= 1.
class MinDegreeInstance {
 public:
  /// Throws std::invalid_argument for k == 0.
  MinDegreeInstance(Graph graph, std::size_t k);

  auto graph() const -> const Graph& { return graph_; }
  auto k() const -> std::size_t { return k_; }

 private:
  Graph graph_;
  std::size_t k_;
};

/**
 * Vertex classes used by the large-instance construction:
 *   low       vertices of degree < k (in every solution)
 *   fringe    vertices outside `low` with a neighbor in `low`
 *   rest      everything else
 *   high_rest vertices of `rest` with degree >= 2k - m - 1, m = |low|
 */
struct MinDegreeAnalysis {
  VertexSet low;
  std::size_t m = 0;
  VertexSet fringe;
  VertexSet rest;
  VertexSet high_rest;
};

/// Largest order for which an instance can be NO: max(2k² - 2, 1).
auto no_instance_order_bound(std::size_t k) -> std::size_t;

auto analyze(const MinDegreeInstance& inst) -> MinDegreeAnalysis;

/// min_degree(G ⊕ s) >= k, computed on the materialized graph.
auto verify_certificate(const Graph& g, const VertexSet& s, std::size_t k) -> bool;

/**
 * Witness for an instance above no_instance_order_bound(k):
 *  - S = ∅ if G already has minimum degree >= k;
 *  - S = low ∪ (the k lowest vertices of high_rest) if |high_rest| >= k;
 *  - otherwise S = low ∪ I, I the ascending greedy maximal independent set
 *    of rest \ high_rest, or of all of rest when 2k - m - 1 <= 0.
 * Throws std::invalid_argument below the bound and ImplementationDefect if
 * the witness fails verification.
 */
auto constructive_witness(const MinDegreeInstance& inst) -> VertexSet;

/// Smallest, then lexicographically least, solution containing `low`.
/// Throws BudgetExceeded when 2^(n - m) > budget.
auto exhaustive_solve(const MinDegreeInstance& inst, std::uint64_t budget = kDefaultBudget) -> Verdict;

/// Constructive above the order bound, exhaustive at or below it.
auto solve(const MinDegreeInstance& inst, std::uint64_t budget = kDefaultBudget) -> Verdict;

/// (K_{k+1}, k) above the order bound, the input unchanged otherwise.
auto kernelize(const MinDegreeInstance& inst) -> MinDegreeInstance;

/**
 * Subgraph complementation to maximum degree <= n - k, decided through the
 * complement: Δ(G ⊕ S) <= n - k iff δ(complement(G) ⊕ S) >= k - 1, and
 * complement(G ⊕ S) = complement(G) ⊕ S, so witnesses carry over as is.
 * Throws std::invalid_argument unless 1 <= k <= n.
 */
auto solve_max_degree_dual(const Graph& g, std::size_t k, std::uint64_t budget = kDefaultBudget) -> Verdict;

}  // namespace subcomp::mindeg
