#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "bicl/vertex_set.hpp"

namespace bicl {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset per vertex. The constructor rejects
/// self-loops and out-of-range endpoints; duplicate edges collapse.
class Graph {
 public:
  Graph() = default;

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  /// Takes ownership of adjacency rows; validates symmetry and loops.
  static Graph from_adjacency(std::vector<VertexSet> rows);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  const VertexSet& neighbors(Vertex v) const { return rows_.at(v); }
  VertexSet closed_neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return rows_.at(v).count(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_.at(u).contains(v); }

  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  VertexSet vertices() const { return VertexSet::full(order()); }

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<VertexSet> rows_;
  std::size_t num_edges_ = 0;
};

/// Result of removing vertices: the new graph plus old -> new indices
/// (kNoVertex for removed vertices).
struct Subgraph {
  Graph graph;
  std::vector<Vertex> index_map;
};

Subgraph delete_vertex(const Graph& g, Vertex v);
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_induced_c4_free(const Graph& g);
bool is_diamond_free(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);

/// Vertices of degree exactly one.
VertexSet pendant_vertices(const Graph& g);

/// True iff `s` has no internal edges.
bool is_independent(const Graph& g, const VertexSet& s);

}  // namespace bicl
