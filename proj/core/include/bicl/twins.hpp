#pragma once

#include <cstddef>
#include <vector>

#include "bicl/graph.hpp"
#include "bicl/vertex_set.hpp"

namespace bicl {

/// Partition of V into maximal false-twin classes (equal open
/// neighbourhoods), singletons included. Classes are ordered by their
/// representative, which is the smallest member.
struct TwinPartition {
  std::vector<VertexSet> classes;
  std::vector<Vertex> representatives;
  /// class_of[v] indexes `classes`.
  std::vector<std::size_t> class_of;

  std::size_t nontrivial_classes() const;
};

TwinPartition false_twin_classes(const Graph& g);
bool is_false_twin_free(const Graph& g);

/// Keeps one representative per false-twin class and repeats until no
/// false twins remain. index_map takes original vertices to the reduced
/// graph (kNoVertex when deleted).
Subgraph tw_reduce(const Graph& g);

/// N[u] = N[v].
bool are_true_twins(const Graph& g, Vertex u, Vertex v);

/// v is dominated by vp when N(v) ⊆ N[vp]. Requires v != vp.
bool is_dominated(const Graph& g, Vertex v, Vertex vp);

VertexSet simplicial_vertices(const Graph& g);

/// Maximal sets of pairwise adjacent simplicial vertices, ordered by their
/// smallest member. Adjacent simplicial vertices are true twins, so these
/// sets partition the simplicial vertices.
std::vector<VertexSet> simplicial_cliques(const Graph& g);

/// Simplicial vertices whose neighbourhood contains no simplicial vertex.
VertexSet alone_vertices(const Graph& g);

/// Alone vertices of degree at least two. Only these take part in an
/// assignment: a degree-one vertex has no edge inside its neighbourhood.
VertexSet assignable_alone_vertices(const Graph& g);

/// One alone vertex associated with `vertex` and the edge {vertex, other}.
struct AssignmentEntry {
  Vertex alone = kNoVertex;
  Vertex vertex = kNoVertex;
  Vertex other = kNoVertex;

  friend bool operator==(const AssignmentEntry&, const AssignmentEntry&) = default;
  friend auto operator<=>(const AssignmentEntry&, const AssignmentEntry&) = default;
};

/// Sorted by alone vertex.
using GoodAssignment = std::vector<AssignmentEntry>;

struct AssignmentOutcome {
  bool feasible = false;
  /// Maximum number of assignable alone vertices that can be served at once.
  std::size_t max_matched = 0;
  /// Complete when feasible; otherwise a maximum partial assignment.
  GoodAssignment assignment;
};

/// (vertex, {vertex, other}) may serve an alone vertex x when both ends lie
/// in N(x) and either vertex is not dominated by other or the two are true
/// twins.
bool slot_eligible(const Graph& g, Vertex alone, Vertex vertex, Vertex other);

/// Number of alone vertices an edge may carry: 1 when its ends are true
/// twins or one dominates the other, otherwise 2 (with distinct associated
/// vertices).
std::size_t edge_capacity(const Graph& g, Vertex u, Vertex v);

/// Decides existence of a good assignment by maximum flow
/// source → alone → (vertex, edge) slot → edge → sink.
AssignmentOutcome good_assignment(const Graph& g);

/// Checks slot eligibility, slot uniqueness, per-edge capacity, and that the
/// domain is exactly the assignable alone set.
bool verify_good_assignment(const Graph& g, const GoodAssignment& assignment);

/// C4- and false-twin-free graph with a good assignment: one alone vertex on
/// a true-twin edge, two alone vertices sharing an associated vertex on
/// different edges. n = 8.
Graph feasible_assignment_fixture();

/// K5 plus 21 alone vertices attached to distinct subsets of size >= 2 of
/// the clique (all pairs, all triples, the whole clique). Ten edges carry at
/// most two alone vertices each, so at most 20 can be assigned. n = 26.
Graph overloaded_clique_fixture();

}  // namespace bicl
