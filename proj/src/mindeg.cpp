#include "subcomp/mindeg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "subcomp/combinatorics.hpp"
#include "subcomp/detect.hpp"
#include "subcomp/errors.hpp"
#include "subcomp/generators.hpp"

namespace subcomp::mindeg {

namespace {

// δ(G ⊕ s) >= k without building G ⊕ s. Vertices outside s keep their
// degree and are assumed to be outside `low`.
auto complemented_degrees_ok(const Graph& g, const VertexSet& s, std::size_t k) -> bool {
  const auto size = s.size();
  for (auto x : s) {
    auto inside = g.neighbors(x).intersection_size(s);
    if (g.degree(x) - inside + (size - 1 - inside) < k) return false;
  }
  return true;
}

}  // namespace

MinDegreeInstance::MinDegreeInstance(Graph graph, std::size_t k) : graph_(std::move(graph)), k_(k) {
  if (k_ == 0) throw std::invalid_argument("target minimum degree k must be at least 1");
}

auto no_instance_order_bound(std::size_t k) -> std::size_t { return std::max<std::size_t>(2 * k * k - 2, 1); }

auto analyze(const MinDegreeInstance& inst) -> MinDegreeAnalysis {
  const auto& g = inst.graph();
  const auto k = inst.k();
  MinDegreeAnalysis a{g.empty_set(), 0, g.empty_set(), g.empty_set(), g.empty_set()};
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < k) a.low.insert(v);
  a.m = a.low.size();
  for (auto v : a.low) a.fringe |= g.neighbors(v);
  a.fringe -= a.low;
  a.rest = (a.low | a.fringe).complement();

  const auto threshold = 2 * static_cast<long long>(k) - static_cast<long long>(a.m) - 1;
  for (auto v : a.rest)
    if (static_cast<long long>(g.degree(v)) >= threshold) a.high_rest.insert(v);
  return a;
}

auto verify_certificate(const Graph& g, const VertexSet& s, std::size_t k) -> bool {
  return has_min_degree_at_least(subgraph_complement(g, s), k);
}

auto constructive_witness(const MinDegreeInstance& inst) -> VertexSet {
  const auto& g = inst.graph();
  const auto k = inst.k();
  if (has_min_degree_at_least(g, k)) return g.empty_set();
  if (g.order() <= no_instance_order_bound(k))
    throw std::invalid_argument("constructive witness needs more than " + std::to_string(no_instance_order_bound(k)) +
                                " vertices for k=" + std::to_string(k));

  auto a = analyze(inst);
  auto s = a.low;
  if (a.high_rest.size() >= k) {
    std::size_t taken = 0;
    for (auto x : a.high_rest) {
      if (taken++ == k) break;
      s.insert(x);
    }
  } else if (2 * static_cast<long long>(k) - static_cast<long long>(a.m) - 1 >= 1) {
    s |= greedy_maximal_independent_set(g, a.rest - a.high_rest);
  } else {
    // m >= 2k - 1: every vertex of rest is "high", and the degree-bound
    // counting argument is vacuous. low alone works for m >= 2k; for
    // m = 2k - 1 one vertex of rest (nonempty above the bound) lifts every
    // low vertex to degree k.
    s |= greedy_maximal_independent_set(g, a.rest);
  }

  if (!verify_certificate(g, s, k))
    throw ImplementationDefect("constructive witness " + to_string(s) + " fails min degree " + std::to_string(k));
  return s;
}

auto exhaustive_solve(const MinDegreeInstance& inst, std::uint64_t budget) -> Verdict {
  const auto& g = inst.graph();
  const auto k = inst.k();
  if (has_min_degree_at_least(g, k)) return Verdict::yes(g.empty_set(), Provenance::Exhaustive);

  auto a = analyze(inst);
  auto free = (a.low.complement()).to_vector();
  if (free.size() >= 64 || (std::uint64_t{1} << free.size()) > budget)
    throw BudgetExceeded("exhaustive search over 2^" + std::to_string(free.size()) + " subsets exceeds budget " +
                         std::to_string(budget));

  // Every solution contains `low`, and adding the same set to candidates
  // of equal size preserves their lexicographic order.
  std::optional<VertexSet> found;
  for (std::size_t size = 0; size <= free.size() && !found; ++size) {
    for_each_combination(free.size(), size, [&](const std::vector<std::size_t>& idx) {
      auto s = a.low;
      for (auto i : idx) s.insert(free[i]);
      if (!complemented_degrees_ok(g, s, k)) return false;
      found = std::move(s);
      return true;
    });
  }
  if (!found) return Verdict::no(Provenance::Exhaustive);
  if (!verify_certificate(g, *found, k))
    throw ImplementationDefect("exhaustive witness " + to_string(*found) + " fails verification");
  return Verdict::yes(std::move(*found), Provenance::Exhaustive);
}

auto solve(const MinDegreeInstance& inst, std::uint64_t budget) -> Verdict {
  if (inst.graph().order() > no_instance_order_bound(inst.k()))
    return Verdict::yes(constructive_witness(inst), Provenance::Constructive);
  return exhaustive_solve(inst, budget);
}

auto kernelize(const MinDegreeInstance& inst) -> MinDegreeInstance {
  if (inst.graph().order() > no_instance_order_bound(inst.k()))
    return MinDegreeInstance(gen::complete(inst.k() + 1), inst.k());
  return inst;
}

auto solve_max_degree_dual(const Graph& g, std::size_t k, std::uint64_t budget) -> Verdict {
  const auto n = g.order();
  if (k < 1 || k > n)
    throw std::invalid_argument("k must satisfy 1 <= k <= n; got k=" + std::to_string(k) + ", n=" + std::to_string(n));
  // Every simple graph has maximum degree <= n - 1.
  if (k == 1) return Verdict::yes(g.empty_set(), Provenance::Constructive);

  auto dual = solve(MinDegreeInstance(complement(g), k - 1), budget);
  if (dual.is_yes() && max_degree(subgraph_complement(g, *dual.witness)) > n - k)
    throw ImplementationDefect("dual witness " + to_string(*dual.witness) + " fails the maximum degree bound");
  return dual;
}

}  // namespace subcomp::mindeg
