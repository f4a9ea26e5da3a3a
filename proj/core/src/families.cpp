#include "bicl/families.hpp"

#include <stdexcept>
#include <vector>

namespace bicl {

namespace {

void need(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

constexpr std::uint64_t kHalfRegimeLimit = 75;

std::uint64_t ceil_half(std::uint64_t n) { return (n + 1) / 2; }

std::uint64_t powerset_order(std::uint64_t k) { return k + (std::uint64_t{1} << k) - 1; }

}  // namespace

Graph crown_cycle(std::size_t k) {
  need(k >= 5, "crown_cycle requires k >= 5");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    edges.emplace_back(i, static_cast<Vertex>((i + 1) % k));
    edges.emplace_back(i, static_cast<Vertex>(k + i));
  }
  return Graph::from_edges(2 * k, edges);
}

Graph powerset_family(std::size_t k) {
  need(k >= 2 && k <= 7, "powerset_family requires 2 <= k <= 7");
  const std::size_t subsets = (std::size_t{1} << k) - 1;
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex j = i + 1; j < k; ++j) edges.emplace_back(i, j);
  }
  for (std::size_t s = 1; s <= subsets; ++s) {
    const auto w = static_cast<Vertex>(k + s - 1);
    for (Vertex i = 0; i < k; ++i) {
      if ((s >> i) & 1U) edges.emplace_back(w, i);
    }
  }
  return Graph::from_edges(k + subsets, edges);
}

Graph complete(std::size_t n) {
  need(n >= 1, "complete requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph::from_edges(n, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
  need(a >= 1 && b >= 1, "complete_bipartite requires both sides nonempty");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i) {
    for (Vertex j = 0; j < b; ++j) edges.emplace_back(i, static_cast<Vertex>(a + j));
  }
  return Graph::from_edges(a + b, edges);
}

Graph path(std::size_t n) {
  need(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  need(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, edges);
}

std::size_t powerset_bracket(std::uint64_t n) {
  std::size_t k = 0;
  while (k + 1 < 63 && powerset_order(k + 1) <= n) ++k;
  return k;
}

std::uint64_t conjecture1_bound(std::uint64_t n) {
  if (n <= kHalfRegimeLimit) return ceil_half(n);
  const std::uint64_t k = powerset_bracket(n);
  return k * k;
}

std::uint64_t conjecture2_bound(std::uint64_t n) {
  if (n <= kHalfRegimeLimit) return ceil_half(n);
  const std::uint64_t k = powerset_bracket(n);
  const std::uint64_t offset = n - powerset_order(k);
  return k * k + (2 * k + 1) * offset / ((std::uint64_t{1} << k) + 1);
}

FamilySpec describe_family(const std::string& name, std::size_t k, std::size_t second) {
  FamilySpec spec{name, k, second, 0, std::nullopt};
  if (name == "crown") {
    need(k >= 5, "crown requires k >= 5");
    spec.expected_vertices = 2 * k;
    spec.expected_bicliques = k;
  } else if (name == "powerset") {
    need(k >= 2 && k <= 7, "powerset requires 2 <= k <= 7");
    spec.expected_vertices = k + (std::size_t{1} << k) - 1;
    spec.expected_bicliques = k * k;
  } else if (name == "complete") {
    need(k >= 1, "complete requires k >= 1");
    spec.expected_vertices = k;
    spec.expected_bicliques = k * (k - 1) / 2;
  } else if (name == "path") {
    need(k >= 1, "path requires k >= 1");
    spec.expected_vertices = k;
    spec.expected_bicliques = k <= 1 ? 0 : (k == 2 ? 1 : k - 2);
  } else if (name == "cycle") {
    need(k >= 3, "cycle requires k >= 3");
    spec.expected_vertices = k;
    spec.expected_bicliques = k == 4 ? 1 : k;
  } else if (name == "bipartite") {
    need(k >= 1 && second >= 1, "bipartite requires both sides >= 1");
    spec.expected_vertices = k + second;
    spec.expected_bicliques = 1;
  } else {
    throw std::invalid_argument("unknown family: " + name);
  }
  return spec;
}

Graph make_family(const FamilySpec& spec) {
  if (spec.name == "crown") return crown_cycle(spec.parameter);
  if (spec.name == "powerset") return powerset_family(spec.parameter);
  if (spec.name == "complete") return complete(spec.parameter);
  if (spec.name == "path") return path(spec.parameter);
  if (spec.name == "cycle") return cycle(spec.parameter);
  if (spec.name == "bipartite") return complete_bipartite(spec.parameter, spec.second_parameter);
  throw std::invalid_argument("unknown family: " + spec.name);
}

}  // namespace bicl
