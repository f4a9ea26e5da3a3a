#include "bicl/vertex_set.hpp"

#include <bit>
#include <cassert>

namespace bicl {

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) {
    assert(v < universe);
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const auto tail = universe & 63; tail != 0) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

VertexSet VertexSet::from_members(std::size_t universe,
                                  const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    assert(v < universe);
    s.insert(v);
  }
  return s;
}

void VertexSet::clear() noexcept {
  for (auto& w : words_) w = 0;
}

std::size_t VertexSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const noexcept {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

Vertex VertexSet::first() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) {
      return static_cast<Vertex>(i * 64 + std::countr_zero(words_[i]));
    }
  }
  return kNoVertex;
}

Vertex VertexSet::next(Vertex after) const noexcept {
  std::size_t from = static_cast<std::size_t>(after) + 1;
  if (from >= universe_) return kNoVertex;
  std::size_t i = from >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) return static_cast<Vertex>(i * 64 + std::countr_zero(w));
    if (++i == words_.size()) return kNoVertex;
    w = words_[i];
  }
}

bool VertexSet::is_subset_of(const VertexSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) noexcept {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) noexcept {
  if (a.universe_ != b.universe_) return a.universe_ <=> b.universe_;
  // Find the smallest vertex d in exactly one of the two sets. The set that
  // holds d is the smaller one unless the other set has nothing beyond d
  // (then the other is a proper prefix and sorts first).
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff == 0) continue;
    const auto d = static_cast<Vertex>(i * 64 + std::countr_zero(diff));
    const bool a_has = a.contains(d);
    const VertexSet& other = a_has ? b : a;
    const bool other_continues = other.next(d) != kNoVertex;
    const bool a_smaller = a_has ? other_continues : !other_continues;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::size_t VertexSet::hash() const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL ^ universe_;
  for (auto w : words_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace bicl
