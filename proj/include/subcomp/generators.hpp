#pragma once

#include <cstddef>
#include <cstdint>

#include "subcomp/graph.hpp"

namespace subcomp::gen {

auto empty(std::size_t n) -> Graph;
auto path(std::size_t n) -> Graph;
/// Throws std::invalid_argument for n < 3.
auto cycle(std::size_t n) -> Graph;
/// K1,t with center 0 and leaves 1..t.
auto star(std::size_t t) -> Graph;
auto complete(std::size_t n) -> Graph;
/// Apexes 0 and 1, base 2 and 3.
auto diamond() -> Graph;
/// Triangle 0-1-2 with pendant 3 attached to 0.
auto paw() -> Graph;
auto petersen() -> Graph;
auto disjoint_union(const Graph& a, const Graph& b) -> Graph;

/**
 * G(n, p) driven by std::mt19937_64 seeded with `seed`. Pairs (i, j), i < j,
 * are visited in lexicographic order; each draws one 64-bit output x and the
 * edge is kept iff (x >> 11) * 2^-53 < p. Bit-reproducible across platforms.
 */
auto gnp(std::size_t n, double p, std::uint64_t seed) -> Graph;

}  // namespace subcomp::gen
