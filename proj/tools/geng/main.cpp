// bicl-geng: every connected graph on n vertices up to isomorphism, one
// canonical graph6 line each, in sorted order.
//
// Graphs on k vertices are grown from those on k-1 by adding a vertex joined
// to each nonempty subset of the old vertices. Every connected graph has a
// non-cut vertex, so every isomorphism class is reached; duplicates are
// removed by canonical form.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <string>
#include <unordered_set>
#include <vector>

#include <CLI11.hpp>

#include "bicl/canonical.hpp"
#include "bicl/graph.hpp"
#include "bicl/graph_io.hpp"

namespace {

std::vector<std::string> grow(const std::vector<std::string>& parents, std::size_t k) {
  std::unordered_set<std::string> seen;
  const auto fresh = static_cast<bicl::Vertex>(k - 1);
  for (const std::string& key : parents) {
    const bicl::Graph parent = bicl::parse_graph6(key);
    const std::vector<bicl::Edge> base = parent.edges();
    for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << (k - 1)); ++subset) {
      std::vector<bicl::Edge> edges = base;
      for (bicl::Vertex v = 0; v < k - 1; ++v) {
        if ((subset >> v) & 1U) edges.emplace_back(v, fresh);
      }
      seen.insert(bicl::canonical_key(bicl::Graph::from_edges(k, edges)));
    }
  }
  std::vector<std::string> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected graphs up to isomorphism as graph6"};
  std::size_t n = 0;
  bool count_only = false;
  std::string output;
  app.add_option("n", n, "Number of vertices")->required()->check(CLI::Range(1, 10));
  app.add_flag("-c,--count", count_only, "Print only the number of graphs");
  app.add_option("-o,--output", output, "Write graphs to this file instead of stdout");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::string> level{bicl::to_graph6(bicl::Graph::from_edges(1, {}))};
  for (std::size_t k = 2; k <= n; ++k) level = grow(level, k);

  if (count_only) {
    std::cout << level.size() << '\n';
    return 0;
  }
  std::ofstream file;
  if (!output.empty()) {
    file.open(output);
    if (!file) {
      std::cerr << "cannot write " << output << '\n';
      return 1;
    }
  }
  std::ostream& out = output.empty() ? std::cout : file;
  for (const std::string& g : level) out << g << '\n';
  return 0;
}
