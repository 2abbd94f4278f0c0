#include "subcomp/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <optional>
#include <stdexcept>
#include <thread>

#include "subcomp/combinatorics.hpp"
#include "subcomp/detect.hpp"
#include "subcomp/errors.hpp"

namespace subcomp::oracle {

namespace {

void require_budget(const Graph& g, std::uint64_t budget) {
  if (g.order() >= 64 || (std::uint64_t{1} << g.order()) > budget)
    throw BudgetExceeded("oracle sweep over 2^" + std::to_string(g.order()) + " subsets exceeds budget " +
                         std::to_string(budget));
}

auto in_class(const Graph& g, const TargetClass& target, std::uint64_t mask) -> bool {
  return target.member(subgraph_complement(g, VertexSet::from_mask(g.order(), mask)));
}

// Size first; among equal sizes the mask holding the lowest differing bit
// has the lexicographically smaller member list.
auto mask_less(std::uint64_t a, std::uint64_t b) -> bool {
  auto pa = std::popcount(a);
  auto pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  auto diff = a ^ b;
  return diff != 0 && (a & diff & (~diff + 1)) != 0;
}

auto parse_positive(std::string_view text, std::string_view spec) -> std::size_t {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw std::invalid_argument("invalid target parameter in '" + std::string(spec) + "'");
  return value;
}

}  // namespace

auto TargetClass::min_degree(std::size_t k) -> TargetClass {
  return {"min-degree:" + std::to_string(k), [k](const Graph& g) { return has_min_degree_at_least(g, k); }};
}

auto TargetClass::star_diamond_free(std::size_t t) -> TargetClass {
  if (t < 3) throw std::invalid_argument("star size t must be at least 3, got " + std::to_string(t));
  return {"star-diamond:" + std::to_string(t), [t](const Graph& g) { return is_target_class_member(g, t); }};
}

auto TargetClass::max_degree_at_most(std::size_t d) -> TargetClass {
  return {"max-degree:" + std::to_string(d), [d](const Graph& g) { return max_degree(g) <= d; }};
}

auto TargetClass::custom(std::string name, std::function<bool(const Graph&)> member) -> TargetClass {
  return {std::move(name), std::move(member)};
}

auto parse_target(std::string_view spec) -> TargetClass {
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw std::invalid_argument("target must look like min-degree:<k> or star-diamond:<t>, got '" +
                                std::string(spec) + "'");
  auto kind = spec.substr(0, colon);
  auto value = parse_positive(spec.substr(colon + 1), spec);
  if (kind == "min-degree") {
    if (value == 0) throw std::invalid_argument("min-degree target needs k >= 1");
    return TargetClass::min_degree(value);
  }
  if (kind == "star-diamond") return TargetClass::star_diamond_free(value);
  throw std::invalid_argument("unknown target class '" + std::string(kind) + "'");
}

auto brute_force(const Graph& g, const TargetClass& target, std::uint64_t budget) -> Verdict {
  require_budget(g, budget);
  const auto n = g.order();
  std::optional<std::uint64_t> hit;
  for (std::size_t size = 0; size <= n && !hit; ++size) {
    for_each_combination(n, size, [&](const std::vector<std::size_t>& idx) {
      std::uint64_t mask = 0;
      for (auto i : idx) mask |= std::uint64_t{1} << i;
      if (!in_class(g, target, mask)) return false;
      hit = mask;
      return true;
    });
  }
  if (!hit) return Verdict::no(Provenance::Oracle);
  return Verdict::yes(VertexSet::from_mask(n, *hit), Provenance::Oracle);
}

auto brute_force_parallel(const Graph& g, const TargetClass& target, unsigned threads, std::uint64_t budget)
    -> Verdict {
  require_budget(g, budget);
  const std::uint64_t total = std::uint64_t{1} << g.order();
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(total)));

  std::vector<std::optional<std::uint64_t>> best(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&, w] {
        const auto lo = total * w / threads;
        const auto hi = total * (w + 1) / threads;
        for (auto mask = lo; mask < hi; ++mask) {
          if (best[w] && !mask_less(mask, *best[w])) continue;
          if (in_class(g, target, mask)) best[w] = mask;
        }
      });
    }
  }

  std::optional<std::uint64_t> hit;
  for (const auto& b : best)
    if (b && (!hit || mask_less(*b, *hit))) hit = b;
  if (!hit) return Verdict::no(Provenance::Oracle);
  return Verdict::yes(VertexSet::from_mask(g.order(), *hit), Provenance::Oracle);
}

auto all_solutions(const Graph& g, const TargetClass& target, std::uint64_t budget) -> std::vector<VertexSet> {
  require_budget(g, budget);
  std::vector<std::uint64_t> masks;
  const std::uint64_t total = std::uint64_t{1} << g.order();
  for (std::uint64_t mask = 0; mask < total; ++mask)
    if (in_class(g, target, mask)) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), mask_less);

  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (auto mask : masks) out.push_back(VertexSet::from_mask(g.order(), mask));
  return out;
}

}  // namespace subcomp::oracle
