#pragma once

#include <cstddef>
#include <numeric>
#include <vector>

namespace subcomp {

/// Calls visit(indices) for every r-subset of {0..n-1} in lexicographic
/// order. Stops early when visit returns true; returns whether it did.
template <class Visit>
auto for_each_combination(std::size_t n, std::size_t r, Visit&& visit) -> bool {
  if (r > n) return false;
  std::vector<std::size_t> idx(r);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (visit(static_cast<const std::vector<std::size_t>&>(idx))) return true;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace subcomp
