#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "subcomp/graph.hpp"
#include "subcomp/verdict.hpp"

namespace subcomp::oracle {

/// Subsets a sweep may visit; 2^24 caps the oracle at 24 vertices.
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// A named, pure membership predicate.
struct TargetClass {
  std::string name;
  std::function<bool(const Graph&)> member;

  static auto min_degree(std::size_t k) -> TargetClass;
  static auto star_diamond_free(std::size_t t) -> TargetClass;
  static auto max_degree_at_most(std::size_t d) -> TargetClass;
  static auto custom(std::string name, std::function<bool(const Graph&)> member) -> TargetClass;
};

/// "min-degree:<k>" or "star-diamond:<t>". Throws std::invalid_argument.
auto parse_target(std::string_view spec) -> TargetClass;

/// Smallest, then lexicographically least S with G ⊕ S in the class.
/// Throws BudgetExceeded when 2^n > budget.
auto brute_force(const Graph& g, const TargetClass& target, std::uint64_t budget = kDefaultBudget) -> Verdict;

/// Same verdict as brute_force; the 2^n masks are split into contiguous
/// ranges across `threads` workers and the canonical minimum is kept.
auto brute_force_parallel(const Graph& g, const TargetClass& target, unsigned threads,
                          std::uint64_t budget = kDefaultBudget) -> Verdict;

/// Every solution, ordered by size then lexicographically.
auto all_solutions(const Graph& g, const TargetClass& target, std::uint64_t budget = kDefaultBudget)
    -> std::vector<VertexSet>;

}  // namespace subcomp::oracle
