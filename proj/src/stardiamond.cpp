#include "subcomp/stardiamond.hpp"

#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "subcomp/combinatorics.hpp"
#include "subcomp/detect.hpp"
#include "subcomp/errors.hpp"
#include "subcomp/split.hpp"

namespace subcomp::stardiamond {

namespace {

auto check(const StarDiamondInstance& inst, const VertexSet& s, WorkBudget& budget) -> bool {
  budget.charge();
  return verify_certificate(inst.graph(), s, inst.t());
}

// What a candidate may take from the common non-neighborhood of u and v.
struct Extension {
  VertexSet s4;
  std::optional<Vertex> extra;
  std::optional<VertexSet> j_set;
};

// Nothing, a single vertex w, or the clique side of a split partition of
// J = N[x] ∩ N[y] ∩ neither for an edge xy inside it. Duplicates (by the
// vertices contributed) keep their first occurrence.
auto neighborhood_extensions(const Graph& g, const VertexSet& neither) -> std::vector<Extension> {
  std::vector<Extension> out;
  std::unordered_set<VertexSet, VertexSetHash> seen;
  auto add = [&](Extension ext) {
    auto contributed = ext.s4;
    if (ext.extra) contributed.insert(*ext.extra);
    if (seen.insert(std::move(contributed)).second) out.push_back(std::move(ext));
  };

  add({g.empty_set(), std::nullopt, std::nullopt});
  for (auto w : neither) add({g.empty_set(), w, std::nullopt});
  for (auto x : neither) {
    for (auto y : g.neighbors(x) & neither) {
      if (y < x) continue;
      auto j = g.closed_neighbors(x) & g.closed_neighbors(y) & neither;
      // (1,1)-split: P independent, Q a clique. The clique side joins S.
      for (auto& part : enumerate_pq_split_partitions(g, j, 1, 1)) add({std::move(part.q_side), std::nullopt, j});
    }
  }
  return out;
}

}  // namespace

StarDiamondInstance::StarDiamondInstance(Graph graph, std::size_t t) : graph_(std::move(graph)), t_(t) {
  if (t_ < 3) throw std::invalid_argument("star size t must be at least 3, got " + std::to_string(t_));
}

auto CandidateAssembly::assemble() const -> VertexSet {
  auto s = s1 | s2 | s3 | s4;
  s.insert(anchor.first);
  s.insert(anchor.second);
  if (extra) s.insert(*extra);
  return s;
}

void WorkBudget::charge() {
  if (++spent_ > limit_)
    throw BudgetExceeded("star-diamond solver exceeded its budget of " + std::to_string(limit_) + " verifications");
}

auto verify_certificate(const Graph& g, const VertexSet& s, std::size_t t) -> bool {
  return is_target_class_member(subgraph_complement(g, s), t);
}

auto step1_diamond_bases(const StarDiamondInstance& inst, WorkBudget& budget) -> Verdict {
  auto s = diamond_degree2_vertices(inst.graph());
  if (check(inst, s, budget)) return Verdict::yes(std::move(s), Provenance::Step1);
  return Verdict::not_found(Provenance::Step1);
}

auto step2_star_isolated(const StarDiamondInstance& inst, WorkBudget& budget) -> Verdict {
  auto ctx = star_center_context(inst.graph(), inst.t());
  if (!ctx) return Verdict::not_found(Provenance::Step2);

  auto isolated = ctx->isolated.to_vector();
  const auto max_excluded = std::min(inst.t() - 2, isolated.size());
  std::optional<VertexSet> found;
  for (std::size_t size = 0; size <= max_excluded && !found; ++size) {
    for_each_combination(isolated.size(), size, [&](const std::vector<std::size_t>& idx) {
      auto s = ctx->isolated;
      for (auto i : idx) s.erase(isolated[i]);
      if (!check(inst, s, budget)) return false;
      found = std::move(s);
      return true;
    });
  }
  if (found) return Verdict::yes(std::move(*found), Provenance::Step2);
  return Verdict::not_found(Provenance::Step2);
}

auto step3_edge_anchored(const StarDiamondInstance& inst, WorkBudget& budget) -> Verdict {
  const auto& g = inst.graph();
  const auto bound = inst.t() - 1;

  for (auto [u, v] : g.edges()) {
    auto ctx = edge_context(g, u, v);
    auto u_parts = enumerate_pq_split_partitions(g, ctx.u_only, bound, bound);
    if (u_parts.empty()) continue;
    auto v_parts = enumerate_pq_split_partitions(g, ctx.v_only, bound, bound);
    if (v_parts.empty()) continue;
    auto common_parts = enumerate_independent_rest_partitions(g, ctx.common, inst.t());
    auto extensions = neighborhood_extensions(g, ctx.neither);

    std::unordered_set<VertexSet, VertexSetHash> tried;
    for (const auto& up : u_parts) {
      for (const auto& vp : v_parts) {
        for (const auto& cp : common_parts) {
          for (const auto& ext : extensions) {
            CandidateAssembly candidate{up.p_side, vp.p_side, cp.rest, ext.s4, {u, v}, ext.extra, ext.j_set};
            auto s = candidate.assemble();
            if (!tried.insert(s).second) continue;
            if (check(inst, s, budget)) return Verdict::yes(std::move(s), Provenance::Step3);
          }
        }
      }
    }
  }
  return Verdict::not_found(Provenance::Step3);
}

auto solve(const StarDiamondInstance& inst, std::uint64_t budget) -> Verdict {
  WorkBudget work(budget);
  for (auto step : {step1_diamond_bases, step2_star_isolated, step3_edge_anchored}) {
    auto verdict = step(inst, work);
    if (verdict.is_yes()) return verdict;
  }
  return Verdict::no(Provenance::Step4);
}

}  // namespace subcomp::stardiamond
