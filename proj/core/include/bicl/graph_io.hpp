#pragma once

#include <string>
#include <string_view>

#include "bicl/graph.hpp"

namespace bicl {

/// Largest order representable with the short (single-byte) graph6 header.
inline constexpr std::size_t kMaxGraph6Order = 62;

/// Decodes one graph6 line. A trailing newline and an optional
/// ">>graph6<<" prefix are accepted. Throws ParseError.
Graph parse_graph6(std::string_view line);

/// Encodes `g` as graph6 without a trailing newline.
/// Throws std::length_error when g.order() > 62.
std::string to_graph6(const Graph& g);

/// Parses "n m" followed by m lines "u v" (0-based). Blank lines and lines
/// starting with '#' are skipped. Throws ParseError.
Graph parse_edge_list(std::string_view text);

std::string to_edge_list(const Graph& g);

enum class GraphFormat { kAuto, kGraph6, kEdgeList };

/// Edge list when the first significant character is a digit, else graph6.
GraphFormat detect_format(std::string_view text);

/// Parses a single graph in the given (or detected) format.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::kAuto);

/// graph6 when it fits, otherwise edge list. Used wherever a graph has to be
/// reported verbatim.
std::string graph_key(const Graph& g);

}  // namespace bicl
