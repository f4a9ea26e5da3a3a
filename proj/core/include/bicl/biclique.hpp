#pragma once

#include <cstddef>
#include <vector>

#include "bicl/graph.hpp"
#include "bicl/vertex_set.hpp"

namespace bicl {

/// Unordered pair of disjoint, nonempty, independent vertex sets that are
/// completely joined to each other.
///
/// Stored in canonical orientation: `a` holds the smallest vertex of a ∪ b,
/// so two values describing the same biclique compare equal.
struct Biclique {
  VertexSet a;
  VertexSet b;

  /// Orients (x, y) canonically.
  static Biclique of(VertexSet x, VertexSet y);

  VertexSet vertices() const { return a | b; }
  bool contains(Vertex v) const { return a.contains(v) || b.contains(v); }
  /// True when one side is exactly {v}.
  bool is_star_centered_at(Vertex v) const;

  friend bool operator==(const Biclique&, const Biclique&) = default;
  friend auto operator<=>(const Biclique&, const Biclique&) = default;
};

/// Deduplicated, sorted collection of bicliques of one graph.
class BicliqueSet {
 public:
  BicliqueSet() = default;
  explicit BicliqueSet(std::size_t order) : order_(order) {}
  /// Sorts and deduplicates.
  BicliqueSet(std::size_t order, std::vector<Biclique> items);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  bool contains(const Biclique& b) const;

  const Biclique& operator[](std::size_t i) const { return items_[i]; }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const std::vector<Biclique>& items() const noexcept { return items_; }

  friend bool operator==(const BicliqueSet&, const BicliqueSet&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Biclique> items_;
};

/// (A, B) induces a complete bipartite graph with independent sides and no
/// outside vertex can join either side.
bool is_maximal_biclique(const Graph& g, const VertexSet& a, const VertexSet& b);

/// Largest order accepted by oracle_bicliques.
inline constexpr std::size_t kOracleMaxOrder = 16;

/// Brute-force reference: scans every vertex subset and every 2-colouring of
/// its components. Throws std::length_error above kOracleMaxOrder.
BicliqueSet oracle_bicliques(const Graph& g);

/// Exact enumeration of all maximal induced bicliques.
BicliqueSet enumerate_bicliques(const Graph& g);

/// Same result as enumerate_bicliques; forces the general search even on
/// induced-C4-free inputs. Exposed for cross-checking the star fast path.
BicliqueSet enumerate_bicliques_general(const Graph& g);

std::size_t count_bicliques(const Graph& g);

BicliqueSet bicliques_containing(const Graph& g, Vertex v);
BicliqueSet star_bicliques(const Graph& g, Vertex v);

/// Filters an already enumerated set; avoids re-running the search.
BicliqueSet bicliques_containing(const BicliqueSet& all, Vertex v);
BicliqueSet star_bicliques(const BicliqueSet& all, Vertex v);

}  // namespace bicl
