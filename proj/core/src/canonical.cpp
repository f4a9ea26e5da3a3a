#include "bicl/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "bicl/graph_io.hpp"

namespace bicl {

namespace {

using Row = std::uint64_t;

// Colours are positions in an ordered partition: colour[v] is the index of
// v's cell, cells numbered 0..cells-1 in order.
struct Colouring {
  std::vector<int> colour;
  int cells = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(static_cast<int>(g.order())), adj_(g.order(), 0) {
    for (const auto& [u, v] : g.edges()) {
      adj_[u] |= Row{1} << v;
      adj_[v] |= Row{1} << u;
    }
  }

  std::vector<Vertex> run() {
    Colouring start{std::vector<int>(n_, 0), n_ == 0 ? 0 : 1};
    std::vector<int> prefix;
    search(std::move(start), prefix);
    return best_order_;
  }

 private:
  // Splits cells by (own colour, neighbour counts per colour) until stable.
  // The signature ignores vertex names, so the result is labelling-invariant.
  void refine(Colouring& c) const {
    std::vector<int> idx(n_);
    std::vector<std::vector<std::uint8_t>> counts(n_);
    while (true) {
      for (int v = 0; v < n_; ++v) {
        counts[v].assign(c.cells, 0);
        for (Row r = adj_[v]; r != 0; r &= r - 1) ++counts[v][c.colour[std::countr_zero(r)]];
      }
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (c.colour[a] != c.colour[b]) return c.colour[a] < c.colour[b];
        return counts[a] < counts[b];
      });
      std::vector<int> next(n_);
      int cells = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && (c.colour[idx[i]] != c.colour[idx[i - 1]] || counts[idx[i]] != counts[idx[i - 1]])) {
          ++cells;
        }
        next[idx[i]] = cells;
      }
      ++cells;
      const bool stable = cells == c.cells;
      c.colour = std::move(next);
      c.cells = cells;
      if (stable) return;
    }
  }

  static Colouring individualise(const Colouring& c, int v) {
    Colouring out = c;
    const int cell = c.colour[v];
    for (int u = 0; u < static_cast<int>(c.colour.size()); ++u) {
      if (c.colour[u] > cell || (c.colour[u] == cell && u != v)) ++out.colour[u];
    }
    ++out.cells;
    return out;
  }

  void leaf(const Colouring& c) {
    std::vector<Vertex> order(n_);
    for (int v = 0; v < n_; ++v) order[c.colour[v]] = static_cast<Vertex>(v);
    std::vector<Row> cert(n_, 0);
    for (int p = 0; p < n_; ++p) {
      for (Row r = adj_[order[p]]; r != 0; r &= r - 1) cert[p] |= Row{1} << c.colour[std::countr_zero(r)];
    }
    if (best_cert_.empty() && n_ > 0 && best_order_.empty()) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
      return;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == best_cert_) {
      // Same certificate: order -> best_order_ is an automorphism.
      std::vector<int> gamma(n_);
      bool identity = true;
      for (int p = 0; p < n_; ++p) {
        gamma[order[p]] = static_cast<int>(best_order_[p]);
        identity = identity && order[p] == best_order_[p];
      }
      if (!identity) generators_.push_back(std::move(gamma));
    }
  }

  // Orbits of the group generated by the known automorphisms that fix every
  // vertex of `prefix`.
  std::vector<int> stabiliser_orbits(const std::vector<int>& prefix) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    const auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& gamma : generators_) {
      if (!std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; })) continue;
      for (int v = 0; v < n_; ++v) parent[find(v)] = find(gamma[v]);
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(Colouring c, std::vector<int>& prefix) {
    refine(c);
    if (c.cells == n_) {
      leaf(c);
      return;
    }
    std::vector<int> size(c.cells, 0);
    for (int v = 0; v < n_; ++v) ++size[c.colour[v]];
    int target = -1;
    for (int cell = 0; cell < c.cells; ++cell) {
      if (size[cell] > 1 && (target == -1 || size[cell] < size[target])) target = cell;
    }

    std::vector<int> explored;
    for (int w = 0; w < n_; ++w) {
      if (c.colour[w] != target) continue;
      if (!explored.empty()) {
        const std::vector<int> orbit = stabiliser_orbits(prefix);
        if (std::any_of(explored.begin(), explored.end(), [&](int e) { return orbit[e] == orbit[w]; })) {
          continue;
        }
      }
      prefix.push_back(w);
      search(individualise(c, w), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  int n_;
  std::vector<Row> adj_;
  std::vector<Row> best_cert_;
  std::vector<Vertex> best_order_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw std::length_error("canonical_labeling supports at most 64 vertices");
  }
  CanonicalLabeling out;
  out.order = Canonizer(g).run();
  std::vector<Vertex> position(g.order());
  for (std::size_t p = 0; p < out.order.size(); ++p) position[out.order[p]] = static_cast<Vertex>(p);
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& [u, v] : g.edges()) edges.emplace_back(position[u], position[v]);
  out.graph = Graph::from_edges(g.order(), edges);
  return out;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.num_edges() != b.num_edges()) return false;
  return canonical_labeling(a).graph == canonical_labeling(b).graph;
}

std::string canonical_key(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) return to_edge_list(g);
  return graph_key(canonical_labeling(g).graph);
}

}  // namespace bicl
