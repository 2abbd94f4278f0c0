#include "subcomp/vertex_set.hpp"

#include <algorithm>

#include "subcomp/errors.hpp"

namespace subcomp {

auto VertexSet::full(std::size_t universe) -> VertexSet {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (auto tail = universe & 63; tail != 0) s.words_.back() = (std::uint64_t{1} << tail) - 1;
  return s;
}

auto VertexSet::from_mask(std::size_t universe, std::uint64_t mask) -> VertexSet {
  if (universe > 64) throw GraphError("from_mask: universe exceeds 64");
  VertexSet s(universe);
  if (universe < 64) mask &= (std::uint64_t{1} << universe) - 1;
  if (universe > 0) s.words_[0] = mask;
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= universe_)
    throw GraphError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(universe_));
  words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
  if (v < universe_) words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

auto VertexSet::first() const -> std::optional<Vertex> {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0) return i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i]));
  return std::nullopt;
}

void VertexSet::require_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw GraphError("vertex set universe mismatch: " + std::to_string(universe_) + " vs " +
                     std::to_string(other.universe_));
}

auto VertexSet::operator|=(const VertexSet& other) -> VertexSet& {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

auto VertexSet::operator&=(const VertexSet& other) -> VertexSet& {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

auto VertexSet::operator-=(const VertexSet& other) -> VertexSet& {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

auto VertexSet::complement() const -> VertexSet { return full(universe_) - *this; }

auto VertexSet::is_subset_of(const VertexSet& other) const -> bool {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

auto VertexSet::intersects(const VertexSet& other) const -> bool {
  require_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

auto VertexSet::intersection_size(const VertexSet& other) const -> std::size_t {
  require_same_universe(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return total;
}

auto VertexSet::to_vector() const -> std::vector<Vertex> { return {begin(), end()}; }

auto VertexSet::hash() const -> std::size_t {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ULL ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

auto lex_less(const VertexSet& a, const VertexSet& b) -> bool {
  auto ia = a.begin();
  auto ib = b.begin();
  for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
    if (*ia != *ib) return *ia < *ib;
  return ia == a.end() && ib != b.end();
}

auto canonical_less(const VertexSet& a, const VertexSet& b) -> bool {
  auto sa = a.size();
  auto sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

auto to_string(const VertexSet& s) -> std::string {
  std::string out = "{";
  bool first = true;
  for (auto v : s) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace subcomp
