#include "subcomp/detect.hpp"

#include <stdexcept>
#include <string>

#include "subcomp/errors.hpp"

namespace subcomp {

namespace {

// Grows `chosen` by `need` more vertices from `candidates`; each pick
// restricts the candidates through `restrict_to`.
template <class Restrict>
auto extend(VertexSet candidates, std::size_t need, VertexSet& chosen, const Restrict& restrict_to) -> bool {
  if (need == 0) return true;
  while (candidates.size() >= need) {
    auto v = *candidates.first();
    candidates.erase(v);
    chosen.insert(v);
    if (extend(restrict_to(candidates, v), need - 1, chosen, restrict_to)) return true;
    chosen.erase(v);
  }
  return false;
}

void require_universe(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw GraphError("vertex set does not belong to this graph");
}

}  // namespace

auto find_clique(const Graph& g, const VertexSet& within, std::size_t size) -> std::optional<VertexSet> {
  require_universe(g, within);
  VertexSet chosen(g.order());
  auto keep_neighbors = [&](const VertexSet& cand, Vertex v) { return cand & g.neighbors(v); };
  if (extend(within, size, chosen, keep_neighbors)) return chosen;
  return std::nullopt;
}

auto find_independent_set(const Graph& g, const VertexSet& within, std::size_t size) -> std::optional<VertexSet> {
  require_universe(g, within);
  VertexSet chosen(g.order());
  auto drop_neighbors = [&](const VertexSet& cand, Vertex v) { return cand - g.neighbors(v); };
  if (extend(within, size, chosen, drop_neighbors)) return chosen;
  return std::nullopt;
}

auto find_induced_diamond(const Graph& g) -> std::optional<DiamondWitness> {
  for (auto [x, y] : g.edges()) {
    auto common = g.neighbors(x) & g.neighbors(y);
    for (auto a : common) {
      auto partners = common - g.neighbors(a);
      partners.erase(a);
      for (auto b : partners)
        if (a < b) return DiamondWitness{{x, y}, {a, b}};
    }
  }
  return std::nullopt;
}

auto diamond_degree2_vertices(const Graph& g) -> VertexSet {
  VertexSet bases(g.order());
  for (auto [x, y] : g.edges()) {
    auto common = g.neighbors(x) & g.neighbors(y);
    for (auto a : common - bases) {
      // a is a base iff some other common neighbor is nonadjacent to it.
      auto partners = common - g.neighbors(a);
      partners.erase(a);
      if (!partners.empty()) bases.insert(a);
    }
  }
  return bases;
}

auto star_centers(const Graph& g, std::size_t t) -> VertexSet {
  VertexSet centers(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= t && find_independent_set(g, g.neighbors(v), t)) centers.insert(v);
  return centers;
}

auto has_induced_star(const Graph& g, std::size_t t) -> bool {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= t && find_independent_set(g, g.neighbors(v), t)) return true;
  return false;
}

auto is_target_class_member(const Graph& g, std::size_t t) -> bool {
  if (t < 3) throw std::invalid_argument("star size t must be at least 3, got " + std::to_string(t));
  return !find_induced_diamond(g) && !has_induced_star(g, t);
}

auto isolated_in_neighborhood(const Graph& g, Vertex r) -> VertexSet {
  if (r >= g.order()) throw GraphError("vertex " + std::to_string(r) + " out of range");
  const auto& around = g.neighbors(r);
  VertexSet isolated(g.order());
  for (auto x : around)
    if (!g.neighbors(x).intersects(around)) isolated.insert(x);
  return isolated;
}

auto star_center_context(const Graph& g, std::size_t t) -> std::optional<StarCenterContext> {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= t && find_independent_set(g, g.neighbors(v), t))
      return StarCenterContext{v, isolated_in_neighborhood(g, v)};
  return std::nullopt;
}

auto greedy_maximal_independent_set(const Graph& g, const VertexSet& within) -> VertexSet {
  require_universe(g, within);
  VertexSet chosen(g.order());
  VertexSet blocked(g.order());
  for (auto v : within) {
    if (blocked.contains(v)) continue;
    chosen.insert(v);
    blocked |= g.neighbors(v);
  }
  return chosen;
}

}  // namespace subcomp
