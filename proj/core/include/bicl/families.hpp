#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "bicl/graph.hpp"

namespace bicl {

/// Cycle v_0..v_{k-1} with a pendant x_i on every v_i. Vertices 0..k-1 are
/// the cycle, k+i is the pendant of i. Requires k >= 5.
Graph crown_cycle(std::size_t k);

/// Clique {0..k-1} plus one independent vertex per nonempty subset of the
/// clique, adjacent to exactly that subset. Subsets are numbered in binary
/// counter order: vertex k+s-1 sees clique vertex i iff bit i of s is set.
/// Requires 2 <= k <= 7.
Graph powerset_family(std::size_t k);

Graph complete(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph path(std::size_t n);
/// Requires n >= 3.
Graph cycle(std::size_t n);

/// Largest k with k + 2^k - 1 <= n.
std::size_t powerset_bracket(std::uint64_t n);

/// ceil(n/2) for n <= 75, otherwise k^2 with k = powerset_bracket(n).
std::uint64_t conjecture1_bound(std::uint64_t n);

/// ceil(n/2) for n <= 75, otherwise
/// k^2 + floor((2k+1)(n - (k + 2^k - 1)) / (2^k + 1)).
std::uint64_t conjecture2_bound(std::uint64_t n);

struct FamilySpec {
  std::string name;
  std::size_t parameter = 0;
  std::size_t second_parameter = 0;
  std::size_t expected_vertices = 0;
  /// Closed form when the family has one.
  std::optional<std::size_t> expected_bicliques;
};

/// Family names: crown, powerset, complete, path, cycle, bipartite.
/// `second` is only read for bipartite. Throws std::invalid_argument on an
/// unknown name or out-of-range parameter.
FamilySpec describe_family(const std::string& name, std::size_t k, std::size_t second = 0);
Graph make_family(const FamilySpec& spec);

}  // namespace bicl
