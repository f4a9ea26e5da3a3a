#include "bicl/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

#include "bicl/error.hpp"

namespace bicl {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  line = trim(line);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw ParseError("graph6: empty line");

  const int head = static_cast<unsigned char>(line.front());
  if (head == 126) throw ParseError("graph6: long-form header (n > 62) is not supported");
  if (head < kOffset || head > 126) throw ParseError("graph6: malformed length header");
  const std::size_t n = static_cast<std::size_t>(head - kOffset);
  line.remove_prefix(1);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  if (line.size() != expected) {
    throw ParseError("graph6: expected " + std::to_string(expected) + " data bytes for n=" +
                     std::to_string(n) + ", got " + std::to_string(line.size()));
  }

  for (char c : line) {
    const int v = static_cast<unsigned char>(c);
    if (v < kOffset || v > 126) throw ParseError("graph6: byte out of range");
  }
  const auto bit = [&](std::size_t k) {
    const int value = static_cast<unsigned char>(line[k / 6]) - kOffset;
    return ((value >> (5 - k % 6)) & 1) != 0;
  };

  // Bits enumerate the upper triangle column by column: (0,1),(0,2),(1,2),...
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (bit(k++)) edges.emplace_back(i, j);
    }
  }
  for (; k < expected * 6; ++k) {
    if (bit(k)) throw ParseError("graph6: nonzero padding bits");
  }
  return Graph::from_edges(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw std::length_error("graph6 short form holds at most 62 vertices, graph has " +
                            std::to_string(n));
  }
  std::string out;
  out.push_back(static_cast<char>(n + kOffset));
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

namespace {

bool parse_two(std::string_view line, std::size_t& a, std::size_t& b) {
  line = trim(line);
  const char* p = line.data();
  const char* end = p + line.size();
  auto r1 = std::from_chars(p, end, a);
  if (r1.ec != std::errc() || r1.ptr == end || !std::isspace(static_cast<unsigned char>(*r1.ptr))) {
    return false;
  }
  p = r1.ptr;
  while (p != end && std::isspace(static_cast<unsigned char>(*p))) ++p;
  auto r2 = std::from_chars(p, end, b);
  return r2.ec == std::errc() && r2.ptr == end;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(number, line);
  }
  if (lines.empty()) throw ParseError("edge list: missing \"n m\" header");

  std::size_t n = 0;
  std::size_t m = 0;
  if (!parse_two(lines.front().second, n, m)) {
    throw ParseError("edge list: malformed header, expected \"n m\"", lines.front().first);
  }
  if (lines.size() - 1 != m) {
    throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::size_t u = 0;
    std::size_t v = 0;
    if (!parse_two(lines[i].second, u, v)) {
      throw ParseError("edge list: malformed edge line", lines[i].first);
    }
    if (u >= n || v >= n) throw ParseError("edge list: endpoint out of range", lines[i].first);
    if (u == v) throw ParseError("edge list: self-loop", lines[i].first);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(n, edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.num_edges()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '#' || std::isdigit(static_cast<unsigned char>(c))) return GraphFormat::kEdgeList;
    return GraphFormat::kGraph6;
  }
  return GraphFormat::kGraph6;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) format = detect_format(text);
  if (format == GraphFormat::kEdgeList) return parse_edge_list(text);

  // One graph6 line, reported by its line number.
  std::size_t number = 0;
  std::size_t found = 0;
  std::string_view graph_line;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    if (line.empty()) continue;
    if (found != 0) throw ParseError("graph6: expected a single graph", number);
    found = number;
    graph_line = line;
  }
  if (found == 0) throw ParseError("graph6: empty input", 1);
  try {
    return parse_graph6(graph_line);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), found);
  }
}

std::string graph_key(const Graph& g) {
  if (g.order() <= kMaxGraph6Order) return to_graph6(g);
  return to_edge_list(g);
}

}  // namespace bicl
