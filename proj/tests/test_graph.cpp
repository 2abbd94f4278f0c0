#include <gtest/gtest.h>

#include <random>

#include "subcomp/errors.hpp"
#include "subcomp/generators.hpp"
#include "subcomp/graph.hpp"
#include "support/naive.hpp"

using namespace subcomp;

namespace {

auto set(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

}  // namespace

TEST(VertexSet, AlgebraAndIteration) {
  auto a = set(70, {0, 3, 64, 69});
  auto b = set(70, {3, 5, 69});
  EXPECT_EQ((a | b).to_vector(), (std::vector<Vertex>{0, 3, 5, 64, 69}));
  EXPECT_EQ((a & b).to_vector(), (std::vector<Vertex>{3, 69}));
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 64}));
  EXPECT_EQ(a.complement().size(), 66U);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(a.intersection_size(b), 2U);
  EXPECT_EQ(*a.first(), 0U);
  EXPECT_FALSE(VertexSet(70).first());
  EXPECT_THROW(a.insert(70), GraphError);
  EXPECT_THROW(a | VertexSet(71), GraphError);
}

TEST(VertexSet, CanonicalOrder) {
  EXPECT_TRUE(lex_less(set(6, {0, 1, 5}), set(6, {0, 2})));
  EXPECT_TRUE(lex_less(set(6, {0, 1}), set(6, {0, 1, 5})));
  EXPECT_TRUE(canonical_less(set(6, {0, 2}), set(6, {0, 1, 5})));
  EXPECT_TRUE(canonical_less(set(6, {1, 2}), set(6, {1, 3})));
  EXPECT_FALSE(canonical_less(set(6, {1, 3}), set(6, {1, 3})));
}

TEST(BuildGraph, Examples) {
  auto p3 = Graph(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3.edge_count(), 2U);
  EXPECT_TRUE(p3.adjacent(1, 0));
  EXPECT_FALSE(p3.adjacent(0, 2));

  EXPECT_EQ(Graph(1, {}).order(), 1U);

  auto d = Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
  EXPECT_EQ(d, gen::diamond());
  EXPECT_EQ(d.degree(2), 2U);
  EXPECT_EQ(d.degree(3), 2U);
}

TEST(BuildGraph, DuplicatesCollapse) {
  auto g = Graph(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1U);
}

TEST(BuildGraph, Errors) {
  EXPECT_THROW(Graph(3, {{0, 3}}), GraphError);
  EXPECT_THROW(Graph(3, {{1, 1}}), GraphError);
}

TEST(SubgraphComplement, Examples) {
  auto p3 = gen::path(3);
  EXPECT_EQ(subgraph_complement(p3, set(3, {0, 2})), gen::complete(3));

  auto g = gen::petersen();
  EXPECT_EQ(subgraph_complement(g, g.empty_set()), g);
  EXPECT_EQ(subgraph_complement(g, g.vertices()), complement(g));
  EXPECT_THROW(subgraph_complement(g, VertexSet(11)), GraphError);
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(gen::complete(3)), gen::empty(3));
  // C5 is self-complementary: 0-2-4-1-3-0 is the complement's cycle.
  auto c5bar = complement(gen::cycle(5));
  EXPECT_EQ(c5bar, Graph(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}}));
  EXPECT_EQ(complement(gen::diamond()).edges(), (std::vector<Edge>{{2, 3}}));
}

TEST(EdgeContext, Examples) {
  auto d = edge_context(gen::diamond(), 0, 1);
  EXPECT_EQ(d.common, set(4, {2, 3}));
  EXPECT_TRUE(d.u_only.empty() && d.v_only.empty() && d.neither.empty());

  auto k2 = edge_context(gen::complete(2), 0, 1);
  EXPECT_TRUE(k2.common.empty() && k2.u_only.empty() && k2.v_only.empty() && k2.neither.empty());

  auto p4 = edge_context(gen::path(4), 1, 2);
  EXPECT_TRUE(p4.common.empty());
  EXPECT_EQ(p4.u_only, set(4, {0}));
  EXPECT_EQ(p4.v_only, set(4, {3}));
  EXPECT_TRUE(p4.neither.empty());

  EXPECT_THROW(edge_context(gen::path(4), 0, 2), GraphError);
}

TEST(DissectSolution, Examples) {
  auto d = dissect_solution(gen::diamond(), set(4, {0, 1, 2, 3}), 0, 1);
  EXPECT_EQ(d.ns_common, set(4, {2, 3}));
  for (const auto* part : {&d.ns_u_only, &d.ns_v_only, &d.ns_neither, &d.nt_common, &d.nt_u_only, &d.nt_v_only,
                           &d.nt_neither})
    EXPECT_TRUE(part->empty());

  auto p = dissect_solution(gen::path(4), set(4, {1, 2}), 1, 2);
  EXPECT_EQ(p.nt_u_only, set(4, {0}));
  EXPECT_EQ(p.nt_v_only, set(4, {3}));
  EXPECT_EQ((p.ns_common | p.ns_u_only | p.ns_v_only | p.ns_neither | p.nt_common | p.nt_neither).size(), 0U);

  auto k = dissect_solution(gen::complete(4), set(4, {0, 1}), 0, 1);
  EXPECT_EQ(k.nt_common, set(4, {2, 3}));
  EXPECT_TRUE(k.ns_common.empty());

  EXPECT_THROW(dissect_solution(gen::complete(4), set(4, {0}), 0, 1), GraphError);
  EXPECT_THROW(dissect_solution(gen::path(4), set(4, {0, 2}), 0, 2), GraphError);
}

TEST(MinDegree, Examples) {
  EXPECT_EQ(min_degree(gen::complete(4)), 3U);
  EXPECT_EQ(min_degree(gen::path(3)), 1U);
  EXPECT_EQ(min_degree(gen::empty(7)), 0U);
  EXPECT_THROW(min_degree(Graph()), GraphError);
  EXPECT_TRUE(has_min_degree_at_least(Graph(), 5));
}

TEST(InducedSubgraph, KeepsParentLabels) {
  auto g = gen::petersen();
  auto h = induced_subgraph(g, set(10, {0, 1, 5, 7}));
  EXPECT_EQ(h.order(), 4U);
  EXPECT_EQ(std::vector<Vertex>(h.labels().begin(), h.labels().end()), (std::vector<Vertex>{0, 1, 5, 7}));
  EXPECT_TRUE(h.adjacent(0, 1));  // 0-1 outer edge
  EXPECT_TRUE(h.adjacent(0, 2));  // 0-5 spoke
  EXPECT_TRUE(h.adjacent(2, 3));  // 5-7 pentagram
  EXPECT_EQ(h.edge_count(), 3U);
}

// Random (G, S) pairs checked against the matrix definition and the
// algebraic identities.
TEST(GraphProperties, RandomPairs) {
  std::mt19937_64 rng(20240601);
  for (int trial = 0; trial < 2000; ++trial) {
    auto n = static_cast<std::size_t>(rng() % 17);
    auto g = gen::gnp(n, static_cast<double>(rng() % 101) / 100.0, rng());
    auto s = naive::random_subset(n, rng);
    auto h = subgraph_complement(g, s);

    ASSERT_EQ(h, naive::complement_on(g, naive::mask_of(s)));
    ASSERT_EQ(subgraph_complement(h, s), g);
    ASSERT_EQ(complement(h), subgraph_complement(complement(g), s));

    auto inside = edges_within(g, s);
    auto size = s.size();
    ASSERT_EQ(h.edge_count(), g.edge_count() - inside + (size * (size - 1) / 2 - inside));

    if (size <= 1) ASSERT_EQ(h, g);
    if (n > 0) {
      VertexSet single(n, {static_cast<Vertex>(rng() % n)});
      ASSERT_EQ(subgraph_complement(g, single), g);
    }

    for (auto [u, v] : g.edges()) {
      auto with_edge = s;
      with_edge.insert(u);
      with_edge.insert(v);
      auto d = dissect_solution(g, with_edge, u, v);
      const VertexSet* parts[] = {&d.ns_common, &d.ns_u_only, &d.ns_v_only, &d.ns_neither,
                                  &d.nt_common, &d.nt_u_only, &d.nt_v_only, &d.nt_neither};
      VertexSet covered(n, {u, v});
      std::size_t total = 2;
      for (const auto* part : parts) {
        covered |= *part;
        total += part->size();
      }
      ASSERT_EQ(covered, g.vertices());
      ASSERT_EQ(total, n);
      ASSERT_EQ(d.ns_common | d.ns_u_only | d.ns_v_only | d.ns_neither | VertexSet(n, {u, v}), with_edge);
      break;
    }
  }
}
