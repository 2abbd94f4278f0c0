#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>

#include "subcomp/graph.hpp"
#include "subcomp/verdict.hpp"

namespace subcomp::stardiamond {

/// Candidate verifications a single solve may spend before refusing.
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

/// A graph together with the forbidden star size t >= 3.
class StarDiamondInstance {
 public:
  /// Throws std::invalid_argument for t < 3.
  StarDiamondInstance(Graph graph, std::size_t t);

  auto graph() const -> const Graph& { return graph_; }
  auto t() const -> std::size_t { return t_; }

 private:
  Graph graph_;
  std::size_t t_;
};

/// One edge-anchored candidate: S = s1 ∪ s2 ∪ s3 ∪ s4 ∪ {u, v} ∪ {w}.
struct CandidateAssembly {
  VertexSet s1;  // ⊆ N(u) \ N[v]
  VertexSet s2;  // ⊆ N(v) \ N[u]
  VertexSet s3;  // ⊆ N(u) ∩ N(v)
  VertexSet s4;  // clique side of a split partition of J, or ∅
  std::pair<Vertex, Vertex> anchor;
  std::optional<Vertex> extra;
  std::optional<VertexSet> j_set;

  auto assemble() const -> VertexSet;
};

/// Counts verifications against a fixed budget; throws BudgetExceeded.
class WorkBudget {
 public:
  explicit WorkBudget(std::uint64_t limit = kDefaultBudget) : limit_(limit) {}

  void charge();
  auto spent() const -> std::uint64_t { return spent_; }

 private:
  std::uint64_t limit_;
  std::uint64_t spent_ = 0;
};

/// G ⊕ s is {K1,t, diamond}-free.
auto verify_certificate(const Graph& g, const VertexSet& s, std::size_t t) -> bool;

/// S = union of base pairs of all induced diamonds.
auto step1_diamond_bases(const StarDiamondInstance& inst, WorkBudget& budget) -> Verdict;

/// S = I minus at most t-2 vertices, I the isolated neighbors of the
/// least-index star center. Excluded sets are tried smallest first.
auto step2_star_isolated(const StarDiamondInstance& inst, WorkBudget& budget) -> Verdict;

/// Candidates that contain an edge uv, built from split partitions of the
/// regions around uv. Edges are scanned in lexicographic order.
auto step3_edge_anchored(const StarDiamondInstance& inst, WorkBudget& budget) -> Verdict;

/// Steps 1-3 in order; NO (tagged step4) if none succeeds.
auto solve(const StarDiamondInstance& inst, std::uint64_t budget = kDefaultBudget) -> Verdict;

}  // namespace subcomp::stardiamond
