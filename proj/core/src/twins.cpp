#include "bicl/twins.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "max_flow.hpp"

namespace bicl {

std::size_t TwinPartition::nontrivial_classes() const {
  return static_cast<std::size_t>(std::count_if(
      classes.begin(), classes.end(), [](const VertexSet& c) { return c.count() > 1; }));
}

TwinPartition false_twin_classes(const Graph& g) {
  const std::size_t n = g.order();
  TwinPartition p;
  p.class_of.assign(n, 0);
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> by_neighbourhood;
  by_neighbourhood.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    auto [it, inserted] = by_neighbourhood.try_emplace(g.neighbors(v), p.classes.size());
    if (inserted) {
      p.classes.emplace_back(n);
      p.representatives.push_back(v);
    }
    p.classes[it->second].insert(v);
    p.class_of[v] = it->second;
  }
  return p;
}

bool is_false_twin_free(const Graph& g) {
  return false_twin_classes(g).classes.size() == g.order();
}

Subgraph tw_reduce(const Graph& g) {
  Subgraph current{g, {}};
  current.index_map.resize(g.order());
  for (Vertex v = 0; v < g.order(); ++v) current.index_map[v] = v;

  while (true) {
    const TwinPartition p = false_twin_classes(current.graph);
    if (p.classes.size() == current.graph.order()) return current;
    const VertexSet keep = VertexSet::from_members(current.graph.order(), p.representatives);
    Subgraph step = induced_subgraph(current.graph, keep);
    for (Vertex& mapped : current.index_map) {
      if (mapped != kNoVertex) mapped = step.index_map[mapped];
    }
    current.graph = std::move(step.graph);
  }
}

bool are_true_twins(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.order() || v >= g.order()) throw std::out_of_range("are_true_twins: vertex out of range");
  return g.closed_neighbors(u) == g.closed_neighbors(v);
}

bool is_dominated(const Graph& g, Vertex v, Vertex vp) {
  if (v >= g.order() || vp >= g.order()) throw std::out_of_range("is_dominated: vertex out of range");
  if (v == vp) throw std::invalid_argument("is_dominated: vertices must differ");
  return g.neighbors(v).is_subset_of(g.closed_neighbors(vp));
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const VertexSet& nv = g.neighbors(v);
    bool clique = true;
    for (Vertex u : nv) {
      if (!nv.is_subset_of(g.closed_neighbors(u))) {
        clique = false;
        break;
      }
    }
    if (clique) out.insert(v);
  }
  return out;
}

std::vector<VertexSet> simplicial_cliques(const Graph& g) {
  const VertexSet simplicial = simplicial_vertices(g);
  VertexSet placed(g.order());
  std::vector<VertexSet> out;
  for (Vertex s : simplicial) {
    if (placed.contains(s)) continue;
    VertexSet group = g.closed_neighbors(s) & simplicial;
    placed |= group;
    out.push_back(std::move(group));
  }
  return out;
}

VertexSet alone_vertices(const Graph& g) {
  const VertexSet simplicial = simplicial_vertices(g);
  VertexSet out(g.order());
  for (Vertex x : simplicial) {
    if (!g.neighbors(x).intersects(simplicial)) out.insert(x);
  }
  return out;
}

VertexSet assignable_alone_vertices(const Graph& g) {
  VertexSet out = alone_vertices(g);
  for (Vertex x : alone_vertices(g)) {
    if (g.degree(x) < 2) out.erase(x);
  }
  return out;
}

bool slot_eligible(const Graph& g, Vertex alone, Vertex vertex, Vertex other) {
  if (vertex == other || !g.adjacent(vertex, other)) return false;
  const VertexSet& nx = g.neighbors(alone);
  if (!nx.contains(vertex) || !nx.contains(other)) return false;
  return !is_dominated(g, vertex, other) || are_true_twins(g, vertex, other);
}

std::size_t edge_capacity(const Graph& g, Vertex u, Vertex v) {
  if (are_true_twins(g, u, v) || is_dominated(g, u, v) || is_dominated(g, v, u)) return 1;
  return 2;
}

AssignmentOutcome good_assignment(const Graph& g) {
  const std::vector<Vertex> alone = assignable_alone_vertices(g).members();
  AssignmentOutcome outcome;
  if (alone.empty()) {
    outcome.feasible = true;
    return outcome;
  }

  constexpr std::size_t kSource = 0;
  constexpr std::size_t kSink = 1;
  detail::MaxFlow flow(2);

  std::vector<std::size_t> alone_node(alone.size());
  for (auto& node : alone_node) {
    node = flow.add_node();
    flow.add_arc(kSource, node, 1);
  }

  // Slot (v, {v, v'}) and edge nodes are created on first use.
  std::map<Edge, std::size_t> edge_node;
  std::map<std::pair<Vertex, Vertex>, std::size_t> slot_node;
  struct SlotArc {
    std::size_t arc;
    Vertex vertex;
    Vertex other;
  };
  std::vector<std::vector<SlotArc>> slot_arcs(alone.size());

  for (std::size_t i = 0; i < alone.size(); ++i) {
    const Vertex x = alone[i];
    for (Vertex v : g.neighbors(x)) {
      for (Vertex vp : g.neighbors(x) & g.neighbors(v)) {
        if (!slot_eligible(g, x, v, vp)) continue;
        const Edge e{std::min(v, vp), std::max(v, vp)};
        auto [eit, new_edge] = edge_node.try_emplace(e, 0);
        if (new_edge) {
          eit->second = flow.add_node();
          flow.add_arc(eit->second, kSink, static_cast<long>(edge_capacity(g, e.first, e.second)));
        }
        auto [sit, new_slot] = slot_node.try_emplace({v, vp}, 0);
        if (new_slot) {
          sit->second = flow.add_node();
          flow.add_arc(sit->second, eit->second, 1);
        }
        slot_arcs[i].push_back({flow.add_arc(alone_node[i], sit->second, 1), v, vp});
      }
    }
  }

  outcome.max_matched = static_cast<std::size_t>(flow.run(kSource, kSink));
  outcome.feasible = outcome.max_matched == alone.size();
  for (std::size_t i = 0; i < alone.size(); ++i) {
    for (const SlotArc& s : slot_arcs[i]) {
      if (flow.flow_on(s.arc) > 0) {
        outcome.assignment.push_back({alone[i], s.vertex, s.other});
        break;
      }
    }
  }
  return outcome;
}

bool verify_good_assignment(const Graph& g, const GoodAssignment& assignment) {
  const VertexSet domain = assignable_alone_vertices(g);
  VertexSet seen(g.order());
  std::map<std::pair<Vertex, Vertex>, int> slot_use;
  std::map<Edge, std::size_t> edge_use;
  for (const AssignmentEntry& e : assignment) {
    if (e.alone >= g.order() || e.vertex >= g.order() || e.other >= g.order()) return false;
    if (!domain.contains(e.alone) || seen.contains(e.alone)) return false;
    seen.insert(e.alone);
    if (!slot_eligible(g, e.alone, e.vertex, e.other)) return false;
    if (++slot_use[{e.vertex, e.other}] > 1) return false;
    const Edge edge{std::min(e.vertex, e.other), std::max(e.vertex, e.other)};
    if (++edge_use[edge] > edge_capacity(g, edge.first, edge.second)) return false;
  }
  return seen == domain;
}

Graph feasible_assignment_fixture() {
  // Clique {0..4}; 0 and 1 are true twins. Alone vertices 5, 6, 7.
  std::vector<Edge> edges;
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
  }
  edges.insert(edges.end(), {{5, 0}, {5, 1}, {6, 2}, {6, 3}, {7, 2}, {7, 4}});
  return Graph::from_edges(8, edges);
}

Graph overloaded_clique_fixture() {
  constexpr Vertex kClique = 5;
  std::vector<std::vector<Vertex>> subsets;
  for (std::size_t size : {2, 3, 5}) {
    for (unsigned mask = 1; mask < (1U << kClique); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
      std::vector<Vertex> s;
      for (Vertex v = 0; v < kClique; ++v) {
        if ((mask >> v) & 1U) s.push_back(v);
      }
      subsets.push_back(std::move(s));
    }
  }
  std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });

  std::vector<Edge> edges;
  for (Vertex u = 0; u < kClique; ++u) {
    for (Vertex v = u + 1; v < kClique; ++v) edges.emplace_back(u, v);
  }
  Vertex next = kClique;
  for (const auto& s : subsets) {
    for (Vertex v : s) edges.emplace_back(next, v);
    ++next;
  }
  return Graph::from_edges(next, edges);
}

}  // namespace bicl
