#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "bicl/census.hpp"

namespace bicl {

namespace {

bool mask_connected(std::size_t n, const std::vector<std::uint32_t>& rows) {
  std::uint32_t seen = 1;
  std::uint32_t frontier = 1;
  while (frontier != 0) {
    std::uint32_t next = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if ((frontier >> v) & 1U) next |= rows[v];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (std::uint32_t{1} << n) - 1;
}

// AHU encoding of the tree rooted at v, with `parent` excluded.
std::string rooted_code(const std::vector<std::vector<Vertex>>& adj, Vertex v, Vertex parent) {
  std::vector<std::string> children;
  for (Vertex c : adj[v]) {
    if (c != parent) children.push_back(rooted_code(adj, c, v));
  }
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const auto& c : children) out += c;
  out += ')';
  return out;
}

// Isomorphism-invariant code of a free tree: rooted at its centre, or at the
// central edge when there are two centres.
std::string tree_code(const std::vector<std::vector<Vertex>>& adj) {
  const std::size_t n = adj.size();
  if (n == 1) return "()";
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = adj[v].size();
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex u : adj[leaf]) {
        if (--degree[u] == 1) next.push_back(u);
      }
    }
    layer = std::move(next);
  }
  if (layer.size() == 1) return rooted_code(adj, layer[0], kNoVertex);
  std::string a = rooted_code(adj, layer[0], layer[1]);
  std::string b = rooted_code(adj, layer[1], layer[0]);
  if (b < a) std::swap(a, b);
  return a + "|" + b;
}

}  // namespace

std::vector<Graph> generate_all_connected(std::size_t n) {
  if (n < 1 || n > kMaxGeneratedOrder) {
    throw std::out_of_range("generate_all_connected requires 1 <= n <= 6");
  }
  // Bit k of the graph6 bitstring (column-major upper triangle) is stored at
  // weight 2^(m-1-k), so numeric order on masks is lexicographic order on
  // bitstrings.
  const std::size_t m = n * (n - 1) / 2;
  std::vector<std::vector<std::size_t>> index(n, std::vector<std::size_t>(n, 0));
  std::vector<Edge> pair_of(m);
  {
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
      for (Vertex i = 0; i < j; ++i) {
        index[i][j] = index[j][i] = k;
        pair_of[k++] = {i, j};
      }
    }
  }

  // For every non-identity permutation p, where pair k lands.
  std::vector<std::vector<std::uint32_t>> images;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  while (std::next_permutation(p.begin(), p.end())) {
    std::vector<std::uint32_t> w(m);
    for (std::size_t k = 0; k < m; ++k) {
      w[k] = std::uint32_t{1} << (m - 1 - index[p[pair_of[k].first]][p[pair_of[k].second]]);
    }
    images.push_back(std::move(w));
  }

  std::vector<Graph> out;
  std::vector<std::uint32_t> rows(n);
  std::vector<std::size_t> present;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::fill(rows.begin(), rows.end(), 0);
    present.clear();
    for (std::size_t k = 0; k < m; ++k) {
      if ((mask >> (m - 1 - k)) & 1U) {
        present.push_back(k);
        rows[pair_of[k].first] |= std::uint32_t{1} << pair_of[k].second;
        rows[pair_of[k].second] |= std::uint32_t{1} << pair_of[k].first;
      }
    }
    if (!mask_connected(n, rows)) continue;
    const bool minimal = std::none_of(images.begin(), images.end(), [&](const std::vector<std::uint32_t>& w) {
      std::uint32_t permuted = 0;
      for (std::size_t k : present) permuted |= w[k];
      return permuted < mask;
    });
    if (!minimal) continue;
    std::vector<Edge> edges;
    edges.reserve(present.size());
    for (std::size_t k : present) edges.push_back(pair_of[k]);
    out.push_back(Graph::from_edges(n, edges));
  }
  return out;
}

std::vector<Graph> generate_trees(std::size_t n) {
  if (n < 1 || n > 16) throw std::out_of_range("generate_trees requires 1 <= n <= 16");
  std::vector<std::vector<std::vector<Vertex>>> level{{{}}};
  for (std::size_t order = 2; order <= n; ++order) {
    std::map<std::string, std::vector<std::vector<Vertex>>> next;
    for (const auto& tree : level) {
      for (Vertex v = 0; v < tree.size(); ++v) {
        auto grown = tree;
        const auto leaf = static_cast<Vertex>(tree.size());
        grown[v].push_back(leaf);
        grown.push_back({v});
        next.try_emplace(tree_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, tree] : next) level.push_back(std::move(tree));
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& tree : level) {
    std::vector<Edge> edges;
    for (Vertex v = 0; v < tree.size(); ++v) {
      for (Vertex u : tree[v]) {
        if (v < u) edges.emplace_back(v, u);
      }
    }
    out.push_back(Graph::from_edges(tree.size(), edges));
  }
  return out;
}

Graph random_connected_graph(std::size_t n, double density, std::mt19937_64& rng) {
  if (n < 1) throw std::invalid_argument("random_connected_graph requires n >= 1");
  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), 0);
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    const Vertex a = label[i];
    const Vertex b = label[pick(rng)];
    adj[a][b] = adj[b][a] = true;
  }
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (adj[u][v] || coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

}  // namespace bicl
