#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "bicl/biclique.hpp"
#include "bicl/graph.hpp"

namespace bicl {

/// An edge {owner, leaf} carrying label 1 or 2. Labels come in pairs that
/// share the owner; the two leaves of a pair are adjacent.
struct LabeledEdge {
  Vertex owner = kNoVertex;
  Vertex leaf = kNoVertex;
  int label = 0;

  friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

using EdgeLabeling = std::vector<LabeledEdge>;

/// witness[v] is the biclique charged to vertex v.
using WitnessMap = std::vector<Biclique>;

struct Witness {
  WitnessMap map;
  EdgeLabeling labels;
};

/// Assigns every vertex its own maximal biclique, proving |bicliques| >= n.
///
/// Requires: n >= 3, connected, induced-C4-free, false-twin-free, minimum
/// degree >= 2, and a good assignment. Throws PreconditionError naming the
/// first failed requirement, and DefectError if a star that must exist is
/// not found.
///
/// Every choice is resolved by lowest index, so output is deterministic.
Witness build_witness(const Graph& g);

/// Total, injective, and every image is a maximal biclique of g.
bool verify_witness(const Graph& g, const WitnessMap& witness);

/// Same, against a precomputed enumeration.
bool verify_witness(const BicliqueSet& bicliques, const WitnessMap& witness);

struct PendantAugmentation {
  Graph graph;
  std::size_t pendants = 0;
  /// {pendant, new, new} per former degree-one vertex.
  std::vector<std::array<Vertex, 3>> triangles;
};

/// Hangs a triangle on every degree-one vertex: for pendant v, adds u and w
/// with {v, u, w} a K3. New vertices are numbered from n upwards in pendant
/// order. Requires: connected, induced-C4-free, false-twin-free.
PendantAugmentation augment_pendants(const Graph& g);

/// n - (number of degree-one vertices). Requires the hypotheses of
/// build_witness except the degree condition.
std::size_t lower_bound_c4(const Graph& g);

}  // namespace bicl
