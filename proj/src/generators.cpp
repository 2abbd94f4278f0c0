#include "subcomp/generators.hpp"

#include <random>
#include <stdexcept>
#include <vector>

namespace subcomp::gen {

auto empty(std::size_t n) -> Graph { return Graph(n); }

auto path(std::size_t n) -> Graph {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph(n, edges);
}

auto cycle(std::size_t n) -> Graph {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

auto star(std::size_t t) -> Graph {
  std::vector<Edge> edges;
  for (Vertex leaf = 1; leaf <= t; ++leaf) edges.emplace_back(0, leaf);
  return Graph(t + 1, edges);
}

auto complete(std::size_t n) -> Graph { return complement(Graph(n)); }

auto diamond() -> Graph { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

auto paw() -> Graph { return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

auto petersen() -> Graph {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
  }
  return Graph(10, edges);
}

auto disjoint_union(const Graph& a, const Graph& b) -> Graph {
  auto edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), edges);
}

auto gnp(std::size_t n, double p, std::uint64_t seed) -> Graph {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) {
      auto unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (unit < p) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

}  // namespace subcomp::gen
