#include "bicl/witness.hpp"

#include <algorithm>
#include <string>

#include "bicl/error.hpp"
#include "bicl/twins.hpp"

namespace bicl {

namespace {

void require(bool ok, Precondition p) {
  if (!ok) throw PreconditionError(p);
}

void require_c4_twin_class(const Graph& g) {
  require(is_connected(g), Precondition::kConnected);
  require(is_induced_c4_free(g), Precondition::kInducedC4Free);
  require(is_false_twin_free(g), Precondition::kFalseTwinFree);
}

Biclique edge_biclique(const Graph& g, Vertex u, Vertex v) {
  return Biclique::of(VertexSet(g.order(), {u}), VertexSet(g.order(), {v}));
}

// Smallest non-simplicial vertex adjacent to every member of `group`.
Vertex common_non_simplicial(const Graph& g, const VertexSet& group, const VertexSet& simplicial) {
  VertexSet common = g.vertices();
  for (Vertex m : group) common &= g.neighbors(m);
  return (common - simplicial).first();
}

// Lexicographically smallest pair of non-adjacent members of `s`.
Edge lowest_non_edge(const Graph& g, const VertexSet& s) {
  for (Vertex a : s) {
    const VertexSet others = s - g.closed_neighbors(a);
    for (Vertex b : others) {
      if (b > a) return {a, b};
    }
  }
  throw DefectError("witness: a non-simplicial vertex has a clique neighbourhood");
}

// Grows `leaves` around `centre` to a maximal star, never adding a vertex of
// `forbidden`. Each round adds the smallest neighbour of the centre that is
// independent of the leaves so far. Forbidden neighbours must end up adjacent
// to some leaf, otherwise the star could still grow and would not be maximal.
Biclique complete_star(const Graph& g, Vertex centre, VertexSet leaves, const VertexSet& forbidden) {
  const VertexSet& around = g.neighbors(centre);
  if (!leaves.is_subset_of(around) || !is_independent(g, leaves) || leaves.intersects(forbidden)) {
    throw DefectError("witness: invalid seed for the star centred at " + std::to_string(centre));
  }
  VertexSet candidates = around - leaves - forbidden;
  for (Vertex l : leaves) candidates -= g.neighbors(l);
  while (!candidates.empty()) {
    const Vertex c = candidates.first();
    leaves.insert(c);
    candidates -= g.neighbors(c);
    candidates.erase(c);
  }
  const VertexSet centre_set(g.order(), {centre});
  if (!is_maximal_biclique(g, centre_set, leaves)) {
    throw DefectError("witness: no admissible maximal star centred at " + std::to_string(centre));
  }
  return Biclique::of(centre_set, std::move(leaves));
}

}  // namespace

Witness build_witness(const Graph& g) {
  const std::size_t n = g.order();
  require(n >= 3, Precondition::kMinOrder);
  require_c4_twin_class(g);
  require(g.min_degree() >= 2, Precondition::kMinDegreeTwo);
  const AssignmentOutcome assignment = good_assignment(g);
  require(assignment.feasible, Precondition::kGoodAssignment);

  Witness out;
  out.map.resize(n);

  // Complete graph: every edge is a biclique and there are at least n of them.
  if (g.num_edges() == n * (n - 1) / 2) {
    const std::vector<Edge> edges = g.edges();
    for (Vertex v = 0; v < n; ++v) out.map[v] = edge_biclique(g, edges[v].first, edges[v].second);
    return out;
  }

  const VertexSet simplicial = simplicial_vertices(g);
  std::vector<VertexSet> label1(n, VertexSet(n));
  std::vector<VertexSet> label2(n, VertexSet(n));
  const auto label_pair = [&](Vertex owner, Vertex first, Vertex second) {
    out.labels.push_back({owner, first, 1});
    out.labels.push_back({owner, second, 2});
    label1[owner].insert(first);
    label2[owner].insert(second);
  };

  struct Pending {
    Vertex owner;
    Vertex vertex;  // simplicial vertex still to be charged
    Vertex leaf;    // its label-2 leaf at the owner
  };
  std::vector<Pending> twin_pairs;
  std::vector<Pending> lonely;

  for (const VertexSet& group : simplicial_cliques(g)) {
    const std::vector<Vertex> m = group.members();
    if (m.size() >= 3) {
      const Vertex v = common_non_simplicial(g, group, simplicial);
      if (v == kNoVertex) throw DefectError("witness: simplicial clique without an outside neighbour");
      label_pair(v, m[0], m[1]);
      std::size_t k = 0;
      for (std::size_t i = 0; i < m.size() && k < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size() && k < m.size(); ++j) {
          out.map[m[k++]] = edge_biclique(g, m[i], m[j]);
        }
      }
    } else if (m.size() == 2) {
      const Vertex v = common_non_simplicial(g, group, simplicial);
      if (v == kNoVertex) throw DefectError("witness: simplicial pair without an outside neighbour");
      label_pair(v, m[0], m[1]);
      out.map[m[0]] = edge_biclique(g, m[0], m[1]);
      twin_pairs.push_back({v, m[1], m[1]});
    } else {
      const Vertex x = m[0];
      const auto entry = std::find_if(assignment.assignment.begin(), assignment.assignment.end(),
                                      [x](const AssignmentEntry& e) { return e.alone == x; });
      if (entry == assignment.assignment.end()) {
        throw DefectError("witness: alone vertex " + std::to_string(x) + " has no assignment");
      }
      if (are_true_twins(g, entry->vertex, entry->other)) {
        out.map[x] = edge_biclique(g, entry->vertex, entry->other);
      } else {
        label_pair(entry->vertex, x, entry->other);
        lonely.push_back({entry->vertex, x, entry->other});
      }
    }
  }

  // Non-simplicial v: a v-star holding all its label-1 leaves. Without
  // labels, seed it with two non-adjacent neighbours: a one-leaf star {v,w}
  // is also a w-star and would collide with w's image when v, w are true
  // twins.
  for (Vertex v = 0; v < n; ++v) {
    if (simplicial.contains(v)) continue;
    VertexSet seed = label1[v];
    if (seed.empty()) {
      const Edge pair = lowest_non_edge(g, g.neighbors(v));
      seed.insert(pair.first);
      seed.insert(pair.second);
    }
    out.map[v] = complete_star(g, v, std::move(seed), label2[v]);
  }

  // Second member z of a simplicial pair: the owner's star through z and the
  // owner's other label-1 leaves.
  for (const Pending& p : twin_pairs) {
    VertexSet seed = label1[p.owner] - g.neighbors(p.vertex);
    seed.insert(p.vertex);
    VertexSet forbidden = label2[p.owner];
    forbidden.erase(p.vertex);
    out.map[p.vertex] = complete_star(g, p.owner, std::move(seed), forbidden);
  }

  // Alone x on edge vv': the v-star through v' and no other label-2 leaf of v.
  for (const Pending& p : lonely) {
    VertexSet seed = label1[p.owner] - g.neighbors(p.leaf);
    seed.insert(p.leaf);
    VertexSet forbidden = label2[p.owner];
    forbidden.erase(p.leaf);
    out.map[p.vertex] = complete_star(g, p.owner, std::move(seed), forbidden);
  }
  return out;
}

bool verify_witness(const BicliqueSet& bicliques, const WitnessMap& witness) {
  if (witness.size() != bicliques.order()) return false;
  std::vector<Biclique> images = witness;
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end()) return false;
  return std::all_of(images.begin(), images.end(),
                     [&](const Biclique& b) { return bicliques.contains(b); });
}

bool verify_witness(const Graph& g, const WitnessMap& witness) {
  if (witness.size() != g.order()) return false;
  return verify_witness(enumerate_bicliques(g), witness);
}

PendantAugmentation augment_pendants(const Graph& g) {
  require_c4_twin_class(g);
  const std::size_t n = g.order();
  PendantAugmentation out;
  std::vector<Edge> edges = g.edges();
  auto next = static_cast<Vertex>(n);
  for (Vertex v : pendant_vertices(g)) {
    const Vertex u = next++;
    const Vertex w = next++;
    edges.insert(edges.end(), {{v, u}, {v, w}, {u, w}});
    out.triangles.push_back({v, u, w});
  }
  out.pendants = out.triangles.size();
  out.graph = Graph::from_edges(next, edges);
  return out;
}

std::size_t lower_bound_c4(const Graph& g) {
  require(g.order() >= 3, Precondition::kMinOrder);
  require_c4_twin_class(g);
  require(good_assignment(g).feasible, Precondition::kGoodAssignment);
  return g.order() - pendant_vertices(g).count();
}

}  // namespace bicl
