#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subcomp {

using Vertex = std::size_t;

/**
 * A subset of {0, ..., universe-1}, stored as packed 64-bit words.
 *
 * All binary operations require both operands to share the same universe.
 * Bits at positions >= universe are kept clear so that word-wise equality
 * and popcount are exact.
 */
class VertexSet {
 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    const_iterator() = default;

    auto operator*() const -> Vertex { return word_index_ * 64 + std::countr_zero(current_); }

    auto operator++() -> const_iterator& {
      current_ &= current_ - 1;
      advance();
      return *this;
    }

    auto operator++(int) -> const_iterator {
      auto copy = *this;
      ++*this;
      return copy;
    }

    friend auto operator==(const const_iterator& a, const const_iterator& b) -> bool {
      return a.word_index_ == b.word_index_ && a.current_ == b.current_;
    }

   private:
    friend class VertexSet;

    const_iterator(std::span<const std::uint64_t> words, std::size_t index)
        : words_(words), word_index_(index), current_(index < words.size() ? words[index] : 0) {
      advance();
    }

    void advance() {
      while (current_ == 0 && word_index_ < words_.size()) {
        ++word_index_;
        current_ = word_index_ < words_.size() ? words_[word_index_] : 0;
      }
    }

    std::span<const std::uint64_t> words_;
    std::size_t word_index_ = 0;
    std::uint64_t current_ = 0;
  };

  VertexSet() = default;

  explicit VertexSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (auto v : members) insert(v);
  }

  template <class Range>
  static auto from_range(std::size_t universe, const Range& members) -> VertexSet {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  static auto full(std::size_t universe) -> VertexSet;

  /// Low `universe` bits of `mask` (universe <= 64).
  static auto from_mask(std::size_t universe, std::uint64_t mask) -> VertexSet;

  auto universe() const -> std::size_t { return universe_; }

  auto contains(Vertex v) const -> bool {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }

  /// Throws GraphError if v is outside the universe.
  void insert(Vertex v);
  void erase(Vertex v);

  auto size() const -> std::size_t {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }

  auto empty() const -> bool {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  auto first() const -> std::optional<Vertex>;

  auto begin() const -> const_iterator { return {words_, 0}; }
  auto end() const -> const_iterator { return {words_, words_.size()}; }

  auto operator|=(const VertexSet& other) -> VertexSet&;
  auto operator&=(const VertexSet& other) -> VertexSet&;
  auto operator-=(const VertexSet& other) -> VertexSet&;

  friend auto operator|(VertexSet a, const VertexSet& b) -> VertexSet { return a |= b; }
  friend auto operator&(VertexSet a, const VertexSet& b) -> VertexSet { return a &= b; }
  friend auto operator-(VertexSet a, const VertexSet& b) -> VertexSet { return a -= b; }

  /// Complement relative to the universe.
  auto complement() const -> VertexSet;

  auto is_subset_of(const VertexSet& other) const -> bool;
  auto intersects(const VertexSet& other) const -> bool;

  /// |this ∩ other| without materializing the intersection.
  auto intersection_size(const VertexSet& other) const -> std::size_t;

  auto to_vector() const -> std::vector<Vertex>;

  auto words() const -> std::span<const std::uint64_t> { return words_; }

  auto hash() const -> std::size_t;

  friend auto operator==(const VertexSet& a, const VertexSet& b) -> bool = default;

 private:
  void require_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the ascending member lists.
auto lex_less(const VertexSet& a, const VertexSet& b) -> bool;

/// Size first, then lexicographic: the canonical witness order.
auto canonical_less(const VertexSet& a, const VertexSet& b) -> bool;

/// "{0,2,5}"
auto to_string(const VertexSet& s) -> std::string;

struct VertexSetHash {
  auto operator()(const VertexSet& s) const -> std::size_t { return s.hash(); }
};

}  // namespace subcomp
