#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "bicl/graph.hpp"

namespace bicl {

/// Largest order canonical_labeling accepts.
inline constexpr std::size_t kMaxCanonicalOrder = 64;

struct CanonicalLabeling {
  /// order[p] is the original vertex placed at position p.
  std::vector<Vertex> order;
  /// g relabelled by `order`; equal for exactly the graphs isomorphic to g.
  Graph graph;
};

/// Individualisation-refinement search over equitable partitions, pruned by
/// the automorphisms it discovers. Throws std::length_error above
/// kMaxCanonicalOrder.
CanonicalLabeling canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// Isomorphism-invariant text key: graph6 of the canonical form. Graphs
/// above kMaxCanonicalOrder fall back to their edge list as given.
std::string canonical_key(const Graph& g);

}  // namespace bicl
