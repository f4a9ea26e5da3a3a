#include "bicl/biclique.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace bicl {

Biclique Biclique::of(VertexSet x, VertexSet y) {
  if (y.first() < x.first()) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

bool Biclique::is_star_centered_at(Vertex v) const {
  const auto single = [v](const VertexSet& s) { return s.contains(v) && s.count() == 1; };
  return single(a) || single(b);
}

BicliqueSet::BicliqueSet(std::size_t order, std::vector<Biclique> items)
    : order_(order), items_(std::move(items)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool BicliqueSet::contains(const Biclique& b) const {
  return std::binary_search(items_.begin(), items_.end(), b);
}

bool is_maximal_biclique(const Graph& g, const VertexSet& a, const VertexSet& b) {
  const std::size_t n = g.order();
  if (a.universe() != n || b.universe() != n) return false;
  if (a.empty() || b.empty() || a.intersects(b)) return false;

  // Vertices adjacent to every member of a side, and to some member of it.
  VertexSet all_of_a = g.vertices();
  VertexSet any_of_a(n);
  for (Vertex v : a) {
    all_of_a &= g.neighbors(v);
    any_of_a |= g.neighbors(v);
  }
  VertexSet all_of_b = g.vertices();
  VertexSet any_of_b(n);
  for (Vertex v : b) {
    all_of_b &= g.neighbors(v);
    any_of_b |= g.neighbors(v);
  }

  if (any_of_a.intersects(a) || any_of_b.intersects(b)) return false;  // sides independent
  if (!b.is_subset_of(all_of_a) || !a.is_subset_of(all_of_b)) return false;  // complete join

  // w joins A when it sees all of B and none of A; symmetrically for B.
  const VertexSet grow_a = all_of_b - a - any_of_a;
  const VertexSet grow_b = all_of_a - b - any_of_b;
  return grow_a.empty() && grow_b.empty();
}

BicliqueSet oracle_bicliques(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kOracleMaxOrder) {
    throw std::length_error("oracle_bicliques: order " + std::to_string(n) + " exceeds " +
                            std::to_string(kOracleMaxOrder));
  }
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }

  std::vector<Biclique> found;
  std::vector<int> colour(n);
  std::vector<int> component(n);
  std::vector<Vertex> stack;
  for (std::uint32_t subset = 1; subset < (1U << n); ++subset) {
    // Properly 2-colour each component of G[subset]; give up if one is odd.
    std::fill(component.begin(), component.end(), -1);
    int components = 0;
    bool bipartite = true;
    for (Vertex s = 0; s < n && bipartite; ++s) {
      if (!((subset >> s) & 1U) || component[s] != -1) continue;
      component[s] = components;
      colour[s] = 0;
      stack.assign(1, s);
      while (!stack.empty() && bipartite) {
        const Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w = 0; w < n; ++w) {
          if (!((adj[u] >> w) & 1U) || !((subset >> w) & 1U)) continue;
          if (component[w] == -1) {
            component[w] = components;
            colour[w] = 1 - colour[u];
            stack.push_back(w);
          } else if (colour[w] == colour[u]) {
            bipartite = false;
            break;
          }
        }
      }
      ++components;
    }
    if (!bipartite) continue;

    // Component 0 keeps its colouring; every other component may be flipped.
    for (std::uint32_t flips = 0; flips < (1U << (components - 1)); ++flips) {
      std::uint32_t side_a = 0;
      std::uint32_t side_b = 0;
      for (Vertex v = 0; v < n; ++v) {
        if (!((subset >> v) & 1U)) continue;
        const int c = component[v];
        const int flipped = c == 0 ? 0 : static_cast<int>((flips >> (c - 1)) & 1U);
        ((colour[v] ^ flipped) == 0 ? side_a : side_b) |= 1U << v;
      }
      if (side_a == 0 || side_b == 0) continue;

      bool complete = true;
      for (Vertex v = 0; v < n && complete; ++v) {
        if ((side_a >> v) & 1U) complete = (adj[v] & side_b) == side_b;
      }
      if (!complete) continue;

      // Maximal: no outside vertex sees all of one side and none of the other.
      bool maximal = true;
      for (Vertex w = 0; w < n && maximal; ++w) {
        if ((subset >> w) & 1U) continue;
        const bool joins_a = (adj[w] & side_b) == side_b && (adj[w] & side_a) == 0;
        const bool joins_b = (adj[w] & side_a) == side_a && (adj[w] & side_b) == 0;
        maximal = !joins_a && !joins_b;
      }
      if (!maximal) continue;

      VertexSet a(n);
      VertexSet b(n);
      for (Vertex v = 0; v < n; ++v) {
        if ((side_a >> v) & 1U) a.insert(v);
        if ((side_b >> v) & 1U) b.insert(v);
      }
      found.push_back(Biclique::of(std::move(a), std::move(b)));
    }
  }
  return BicliqueSet(n, std::move(found));
}

namespace {

// Bron-Kerbosch with Tomita pivoting over an explicit adjacency.
//
// For biclique search the host graph is the "doubled" graph on 2n vertices:
// copy i and copy j of the same side are adjacent iff i, j are distinct and
// non-adjacent in G, and copy i on the left meets copy j on the right iff ij
// is an edge. Cliques there are exactly pairs (A, B) of independent sets that
// are completely joined, and maximal cliques are maximal such pairs.
class CliqueSearch {
 public:
  using Report = std::vector<VertexSet>;

  CliqueSearch(const std::vector<VertexSet>& adjacency, Report& out)
      : adjacency_(adjacency), out_(out) {}

  // Restricts reports to cliques meeting both `left` and `right`.
  void require_both(VertexSet left, VertexSet right) {
    left_ = std::move(left);
    right_ = std::move(right);
    split_ = true;
  }

  void run(VertexSet candidates) {
    const std::size_t n = candidates.universe();
    expand(VertexSet(n), std::move(candidates), VertexSet(n));
  }

 private:
  void expand(VertexSet clique, VertexSet candidates, VertexSet excluded) {
    if (candidates.empty()) {
      if (excluded.empty() && (!split_ || (clique.intersects(left_) && clique.intersects(right_)))) {
        out_.push_back(std::move(clique));
      }
      return;
    }
    if (split_) {
      // Every clique below is a subset of clique ∪ candidates.
      if (!clique.intersects(left_) && !candidates.intersects(left_)) return;
      if (!clique.intersects(right_) && !candidates.intersects(right_)) return;
    }

    Vertex pivot = kNoVertex;
    std::size_t best = 0;
    for (const VertexSet* pool : {&candidates, &excluded}) {
      for (Vertex u : *pool) {
        const std::size_t hits = (candidates & adjacency_[u]).count();
        if (pivot == kNoVertex || hits > best) {
          pivot = u;
          best = hits;
        }
      }
    }

    const VertexSet branch = candidates - adjacency_[pivot];
    for (Vertex v : branch) {
      VertexSet grown = clique;
      grown.insert(v);
      expand(std::move(grown), candidates & adjacency_[v], excluded & adjacency_[v]);
      candidates.erase(v);
      excluded.insert(v);
    }
  }

  const std::vector<VertexSet>& adjacency_;
  Report& out_;
  VertexSet left_;
  VertexSet right_;
  bool split_ = false;
};

BicliqueSet enumerate_general(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t doubled = 2 * n;
  std::vector<VertexSet> adjacency(doubled, VertexSet(doubled));
  VertexSet left(doubled);
  VertexSet right(doubled);
  for (Vertex u = 0; u < n; ++u) {
    left.insert(u);
    right.insert(u + static_cast<Vertex>(n));
    for (Vertex w = 0; w < n; ++w) {
      if (w == u) continue;
      const auto wr = w + static_cast<Vertex>(n);
      if (g.adjacent(u, w)) {
        adjacency[u].insert(wr);
        adjacency[u + n].insert(w);
      } else {
        adjacency[u].insert(w);
        adjacency[u + n].insert(wr);
      }
    }
  }

  CliqueSearch::Report cliques;
  CliqueSearch search(adjacency, cliques);
  search.require_both(left, right);
  search.run(VertexSet::full(doubled));

  std::vector<Biclique> items;
  items.reserve(cliques.size());
  for (const VertexSet& c : cliques) {
    VertexSet a(n);
    VertexSet b(n);
    for (Vertex v : c) {
      if (v < n) {
        a.insert(v);
      } else {
        b.insert(v - static_cast<Vertex>(n));
      }
    }
    items.push_back(Biclique::of(std::move(a), std::move(b)));
  }
  return BicliqueSet(n, std::move(items));
}

// In an induced-C4-free graph every biclique is a star: a centre v and a
// maximal independent subset of N(v). Those subsets are the maximal cliques
// of the complement of G[N(v)].
BicliqueSet enumerate_stars(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> complement(n, VertexSet(n));
  for (Vertex u = 0; u < n; ++u) {
    complement[u] = g.vertices() - g.neighbors(u);
    complement[u].erase(u);
  }

  std::vector<Biclique> items;
  CliqueSearch::Report leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (g.neighbors(v).empty()) continue;
    leaves.clear();
    CliqueSearch search(complement, leaves);
    search.run(g.neighbors(v));
    VertexSet centre(n);
    centre.insert(v);
    for (VertexSet& l : leaves) {
      if (l.empty() || !is_maximal_biclique(g, centre, l)) continue;
      items.push_back(Biclique::of(centre, std::move(l)));
    }
  }
  return BicliqueSet(n, std::move(items));
}

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                            std::to_string(g.order()));
  }
}

}  // namespace

BicliqueSet enumerate_bicliques_general(const Graph& g) { return enumerate_general(g); }

BicliqueSet enumerate_bicliques(const Graph& g) {
  if (is_induced_c4_free(g)) return enumerate_stars(g);
  return enumerate_general(g);
}

std::size_t count_bicliques(const Graph& g) { return enumerate_bicliques(g).size(); }

BicliqueSet bicliques_containing(const BicliqueSet& all, Vertex v) {
  std::vector<Biclique> items;
  for (const Biclique& b : all) {
    if (b.contains(v)) items.push_back(b);
  }
  return BicliqueSet(all.order(), std::move(items));
}

BicliqueSet star_bicliques(const BicliqueSet& all, Vertex v) {
  std::vector<Biclique> items;
  for (const Biclique& b : all) {
    if (b.is_star_centered_at(v)) items.push_back(b);
  }
  return BicliqueSet(all.order(), std::move(items));
}

BicliqueSet bicliques_containing(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return bicliques_containing(enumerate_bicliques(g), v);
}

BicliqueSet star_bicliques(const Graph& g, Vertex v) {
  check_vertex(g, v);
  return star_bicliques(enumerate_bicliques(g), v);
}

}  // namespace bicl
