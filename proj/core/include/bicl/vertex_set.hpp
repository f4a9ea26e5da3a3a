#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace bicl {

using Vertex = std::uint32_t;
inline constexpr Vertex kNoVertex = ~Vertex{0};

/// Dense bitset over the vertex indices 0..universe-1 of one graph.
///
/// The universe is fixed at construction. Binary operations require both
/// operands to share a universe. Ordering is lexicographic over the sorted
/// member lists, which is what canonical biclique keys are built from.
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
    const_iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    const_iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const const_iterator& a, const const_iterator& b) {
      return a.at_ == b.at_;
    }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = kNoVertex;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  static VertexSet from_members(std::size_t universe,
                                const std::vector<Vertex>& members);

  std::size_t universe() const noexcept { return universe_; }

  bool contains(Vertex v) const noexcept {
    return v < universe_ && (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void clear() noexcept;

  std::size_t count() const noexcept;
  bool empty() const noexcept;

  /// Smallest member, or kNoVertex.
  Vertex first() const noexcept;
  /// Smallest member strictly greater than `after`, or kNoVertex.
  Vertex next(Vertex after) const noexcept;

  bool is_subset_of(const VertexSet& other) const noexcept;
  bool intersects(const VertexSet& other) const noexcept;

  std::vector<Vertex> members() const;

  const_iterator begin() const { return {this, first()}; }
  const_iterator end() const { return {this, kNoVertex}; }

  VertexSet& operator&=(const VertexSet& other) noexcept;
  VertexSet& operator|=(const VertexSet& other) noexcept;
  VertexSet& operator-=(const VertexSet& other) noexcept;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;
  friend std::strong_ordering operator<=>(const VertexSet& a,
                                          const VertexSet& b) noexcept;

  std::size_t hash() const noexcept;

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const noexcept { return s.hash(); }
};

}  // namespace bicl
