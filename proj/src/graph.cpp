#include "subcomp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "subcomp/errors.hpp"

namespace subcomp {

namespace {

auto identity_labels(std::size_t n) -> std::vector<Vertex> {
  std::vector<Vertex> labels(n);
  std::iota(labels.begin(), labels.end(), Vertex{0});
  return labels;
}

void require_subset(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw GraphError("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                     std::to_string(g.order()));
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), rows_(n, VertexSet(n)), labels_(identity_labels(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    rows_[u].insert(v);
    rows_[v].insert(u);
  }
}

auto Graph::from_rows(std::vector<VertexSet> rows, std::vector<Vertex> labels) -> Graph {
  Graph g;
  g.n_ = rows.size();
  g.rows_ = std::move(rows);
  g.labels_ = labels.empty() ? identity_labels(g.n_) : std::move(labels);
  if (g.labels_.size() != g.n_) throw GraphError("label table size does not match vertex count");
  return g;
}

auto Graph::edge_count() const -> std::size_t {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += row.size();
  return twice / 2;
}

auto Graph::closed_neighbors(Vertex v) const -> VertexSet {
  auto closed = rows_[v];
  closed.insert(v);
  return closed;
}

auto Graph::edges() const -> std::vector<Edge> {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (auto v : rows_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

auto build_graph(std::size_t n, std::span<const Edge> edges) -> Graph { return Graph(n, edges); }

auto subgraph_complement(const Graph& g, const VertexSet& s) -> Graph {
  require_subset(g, s);
  std::vector<VertexSet> rows;
  rows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!s.contains(v)) {
      rows.push_back(g.neighbors(v));
      continue;
    }
    // Outside S unchanged; inside S flipped, minus the diagonal.
    auto row = (g.neighbors(v) - s) | (s - g.neighbors(v));
    row.erase(v);
    rows.push_back(std::move(row));
  }
  return Graph::from_rows(std::move(rows), {g.labels().begin(), g.labels().end()});
}

auto complement(const Graph& g) -> Graph { return subgraph_complement(g, g.vertices()); }

auto induced_subgraph(const Graph& g, const VertexSet& s) -> Graph {
  require_subset(g, s);
  auto members = s.to_vector();
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < members.size(); ++i) index[members[i]] = i;

  std::vector<VertexSet> rows(members.size(), VertexSet(members.size()));
  std::vector<Vertex> labels;
  labels.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto w : g.neighbors(members[i]) & s) rows[i].insert(index[w]);
    labels.push_back(g.label(members[i]));
  }
  return Graph::from_rows(std::move(rows), std::move(labels));
}

auto min_degree(const Graph& g) -> std::size_t {
  if (g.order() == 0) throw GraphError("min_degree is undefined for the empty graph");
  std::size_t best = g.degree(0);
  for (Vertex v = 1; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

auto max_degree(const Graph& g) -> std::size_t {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

auto has_min_degree_at_least(const Graph& g, std::size_t k) -> bool {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) < k) return false;
  return true;
}

auto edges_within(const Graph& g, const VertexSet& s) -> std::size_t {
  require_subset(g, s);
  std::size_t twice = 0;
  for (auto v : s) twice += g.neighbors(v).intersection_size(s);
  return twice / 2;
}

auto is_clique(const Graph& g, const VertexSet& s) -> bool {
  auto k = s.size();
  return k < 2 || edges_within(g, s) == k * (k - 1) / 2;
}

auto is_independent(const Graph& g, const VertexSet& s) -> bool {
  require_subset(g, s);
  for (auto v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

auto edge_context(const Graph& g, Vertex u, Vertex v) -> EdgeContext {
  if (u >= g.order() || v >= g.order() || !g.adjacent(u, v))
    throw GraphError("(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  EdgeContext ctx;
  ctx.u = u;
  ctx.v = v;
  const auto& nu = g.neighbors(u);
  const auto& nv = g.neighbors(v);
  ctx.common = nu & nv;
  ctx.u_only = nu - g.closed_neighbors(v);
  ctx.v_only = nv - g.closed_neighbors(u);
  ctx.neither = (g.closed_neighbors(u) | g.closed_neighbors(v)).complement();
  return ctx;
}

auto dissect_solution(const Graph& g, const VertexSet& s, Vertex u, Vertex v) -> SolutionDissection {
  require_subset(g, s);
  auto ctx = edge_context(g, u, v);
  if (!s.contains(u) || !s.contains(v))
    throw GraphError("dissection anchor (" + std::to_string(u) + "," + std::to_string(v) + ") is not inside S");
  auto outside = s.complement();
  return {ctx.common & s,     ctx.u_only & s,     ctx.v_only & s,     ctx.neither & s,
          ctx.common & outside, ctx.u_only & outside, ctx.v_only & outside, ctx.neither & outside};
}

}  // namespace subcomp
