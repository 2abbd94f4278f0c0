#include "subcomp/split.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "subcomp/detect.hpp"
#include "subcomp/errors.hpp"

namespace subcomp {

namespace {

class SplitEnumerator {
 public:
  SplitEnumerator(const Graph& g, std::size_t p, std::size_t q) : g_(g), p_(p), q_(q) {}

  void run(const VertexSet& ground) {
    VertexSet none(g_.order());
    branch(none, none, ground);
  }

  auto take() -> std::vector<SplitPartition> { return std::move(out_); }

 private:
  // Invariant: G[p_side] is K_{p+1}-free and G[q_side] is (q+1)K1-free.
  void branch(VertexSet p_side, VertexSet q_side, VertexSet unassigned) {
    if (auto clique = find_clique(g_, p_side | unassigned, p_ + 1)) {
      fan_out(std::move(p_side), std::move(q_side), std::move(unassigned), *clique & unassigned, /*to_q=*/true);
      return;
    }
    if (auto indep = find_independent_set(g_, q_side | unassigned, q_ + 1)) {
      fan_out(std::move(p_side), std::move(q_side), std::move(unassigned), *indep & unassigned, /*to_q=*/false);
      return;
    }
    emit_all_completions(p_side, q_side, unassigned.to_vector(), 0);
  }

  // One member of `culprits` must cross to the opposite side; branch i sends
  // culprit i across and keeps culprits 0..i-1 on the tempting side.
  void fan_out(VertexSet p_side, VertexSet q_side, VertexSet unassigned, const VertexSet& culprits, bool to_q) {
    for (auto c : culprits) {
      auto p_next = p_side;
      auto q_next = q_side;
      (to_q ? q_next : p_next).insert(c);
      auto rest = unassigned;
      rest.erase(c);
      if (admissible(p_next, q_next)) branch(std::move(p_next), std::move(q_next), std::move(rest));
      // Later branches see c fixed on the tempting side.
      (to_q ? p_side : q_side).insert(c);
      unassigned.erase(c);
      if (!admissible(p_side, q_side)) return;
    }
  }

  auto admissible(const VertexSet& p_side, const VertexSet& q_side) const -> bool {
    return !find_clique(g_, p_side, p_ + 1) && !find_independent_set(g_, q_side, q_ + 1);
  }

  void emit_all_completions(VertexSet& p_side, VertexSet& q_side, const std::vector<Vertex>& free, std::size_t i) {
    if (i == free.size()) {
      out_.push_back({p_side, q_side, p_, q_});
      return;
    }
    p_side.insert(free[i]);
    emit_all_completions(p_side, q_side, free, i + 1);
    p_side.erase(free[i]);
    q_side.insert(free[i]);
    emit_all_completions(p_side, q_side, free, i + 1);
    q_side.erase(free[i]);
  }

  const Graph& g_;
  std::size_t p_;
  std::size_t q_;
  std::vector<SplitPartition> out_;
};

void require_ground(const Graph& g, const VertexSet& ground) {
  if (ground.universe() != g.order()) throw GraphError("ground set does not belong to this graph");
}

}  // namespace

auto clique_number_at_most(const Graph& g, const VertexSet& within, std::size_t bound) -> bool {
  return !find_clique(g, within, bound + 1);
}

auto clique_number_at_most(const Graph& g, std::size_t bound) -> bool {
  return clique_number_at_most(g, g.vertices(), bound);
}

auto independence_number_at_most(const Graph& g, const VertexSet& within, std::size_t bound) -> bool {
  return !find_independent_set(g, within, bound + 1);
}

auto independence_number_at_most(const Graph& g, std::size_t bound) -> bool {
  return independence_number_at_most(g, g.vertices(), bound);
}

auto is_valid_split_partition(const Graph& g, const VertexSet& ground, const SplitPartition& part) -> bool {
  require_ground(g, ground);
  return !part.p_side.intersects(part.q_side) && (part.p_side | part.q_side) == ground &&
         clique_number_at_most(g, part.p_side, part.p) && independence_number_at_most(g, part.q_side, part.q);
}

auto enumerate_pq_split_partitions(const Graph& g, const VertexSet& ground, std::size_t p, std::size_t q)
    -> std::vector<SplitPartition> {
  if (p == 0 || q == 0) throw std::invalid_argument("split bounds p and q must be at least 1");
  require_ground(g, ground);
  SplitEnumerator enumerator(g, p, q);
  enumerator.run(ground);
  auto parts = enumerator.take();
  std::sort(parts.begin(), parts.end(),
            [](const SplitPartition& a, const SplitPartition& b) { return lex_less(a.p_side, b.p_side); });
  return parts;
}

auto enumerate_pq_split_partitions(const Graph& g, std::size_t p, std::size_t q) -> std::vector<SplitPartition> {
  return enumerate_pq_split_partitions(g, g.vertices(), p, q);
}

auto enumerate_independent_rest_partitions(const Graph& g, const VertexSet& ground, std::size_t t)
    -> std::vector<IndependentRestPartition> {
  if (t < 3) throw std::invalid_argument("star size t must be at least 3, got " + std::to_string(t));
  require_ground(g, ground);

  // Independent sets grown in ascending index order, collected per size so
  // the output is size-major and lexicographic within each size.
  std::vector<std::vector<VertexSet>> by_size(t);
  auto grow = [&](auto&& self, VertexSet chosen, const VertexSet& candidates) -> void {
    by_size[chosen.size()].push_back(chosen);
    if (chosen.size() + 1 == t) return;
    for (auto v : candidates) {
      auto next = chosen;
      next.insert(v);
      auto later = candidates - g.closed_neighbors(v);
      for (auto w : candidates) {
        if (w > v) break;
        later.erase(w);
      }
      self(self, std::move(next), later);
    }
  };
  grow(grow, VertexSet(g.order()), ground);

  std::vector<IndependentRestPartition> out;
  for (auto& level : by_size) {
    std::sort(level.begin(), level.end(), lex_less);
    for (auto& indep : level) out.push_back({ground - indep, std::move(indep)});
  }
  return out;
}

auto enumerate_independent_rest_partitions(const Graph& g, std::size_t t) -> std::vector<IndependentRestPartition> {
  return enumerate_independent_rest_partitions(g, g.vertices(), t);
}

}  // namespace subcomp
