#include "bicl/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bicl {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.rows_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (u == v) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    if (!g.rows_[u].contains(v)) {
      g.rows_[u].insert(v);
      g.rows_[v].insert(u);
      ++g.num_edges_;
    }
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexSet> rows) {
  const std::size_t n = rows.size();
  std::size_t degree_sum = 0;
  for (Vertex u = 0; u < n; ++u) {
    if (rows[u].universe() != n) {
      throw std::invalid_argument("adjacency row has the wrong universe");
    }
    if (rows[u].contains(u)) {
      throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    }
    for (Vertex v : rows[u]) {
      if (!rows[v].contains(u)) {
        throw std::invalid_argument("adjacency is not symmetric");
      }
    }
    degree_sum += rows[u].count();
  }
  Graph g;
  g.rows_ = std::move(rows);
  g.num_edges_ = degree_sum / 2;
  return g;
}

VertexSet Graph::closed_neighbors(Vertex v) const {
  VertexSet s = rows_.at(v);
  s.insert(v);
  return s;
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& r : rows_) best = std::max(best, r.count());
  return best;
}

std::size_t Graph::min_degree() const noexcept {
  if (rows_.empty()) return 0;
  std::size_t best = rows_.front().count();
  for (const auto& r : rows_) best = std::min(best, r.count());
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = rows_[u].next(u); v != kNoVertex; v = rows_[u].next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  std::vector<Vertex> index_map(g.order(), kNoVertex);
  Vertex next = 0;
  for (Vertex v : keep) index_map[v] = next++;
  std::vector<VertexSet> rows(next, VertexSet(next));
  for (Vertex u : keep) {
    for (Vertex w : g.neighbors(u)) {
      if (index_map[w] != kNoVertex) rows[index_map[u]].insert(index_map[w]);
    }
  }
  return {Graph::from_adjacency(std::move(rows)), std::move(index_map)};
}

Subgraph delete_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  }
  VertexSet keep = g.vertices();
  keep.erase(v);
  return induced_subgraph(g, keep);
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  VertexSet seen(g.order());
  VertexSet frontier(g.order());
  frontier.insert(0);
  seen.insert(0);
  while (!frontier.empty()) {
    VertexSet next(g.order());
    for (Vertex u : frontier) next |= g.neighbors(u);
    next -= seen;
    seen |= next;
    frontier = std::move(next);
  }
  return seen.count() == g.order();
}

bool is_triangle_free(const Graph& g) {
  for (const auto& [u, v] : g.edges()) {
    if (g.neighbors(u).intersects(g.neighbors(v))) return false;
  }
  return true;
}

namespace {

// True iff `s` contains two distinct non-adjacent vertices.
bool has_non_edge(const Graph& g, const VertexSet& s) {
  for (Vertex b : s) {
    VertexSet rest = s - g.neighbors(b);
    rest.erase(b);
    if (!rest.empty()) return true;
  }
  return false;
}

}  // namespace

bool is_induced_c4_free(const Graph& g) {
  // An induced C4 is a non-adjacent pair with two non-adjacent common neighbours.
  for (Vertex a = 0; a < g.order(); ++a) {
    for (Vertex c = a + 1; c < g.order(); ++c) {
      if (g.adjacent(a, c)) continue;
      const VertexSet common = g.neighbors(a) & g.neighbors(c);
      if (common.count() >= 2 && has_non_edge(g, common)) return false;
    }
  }
  return true;
}

bool is_diamond_free(const Graph& g) {
  // A diamond is an edge with two non-adjacent common neighbours.
  for (const auto& [u, v] : g.edges()) {
    const VertexSet common = g.neighbors(u) & g.neighbors(v);
    if (common.count() >= 2 && has_non_edge(g, common)) return false;
  }
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          stack.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.num_edges() + 1 == g.order() && is_connected(g);
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.insert(v);
  }
  return out;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) {
    if (g.neighbors(v).intersects(s)) return false;
  }
  return true;
}

}  // namespace bicl
