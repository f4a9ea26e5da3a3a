#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace bicl::detail {

// Ford-Fulkerson with depth-first augmenting paths. Arcs are explored in
// insertion order, so results are deterministic. Meant for the small
// unit-capacity networks of the assignment problem.
class MaxFlow {
 public:
  explicit MaxFlow(std::size_t nodes) : out_(nodes) {}

  std::size_t add_node() {
    out_.emplace_back();
    return out_.size() - 1;
  }

  // Returns the arc id; its reverse arc is id ^ 1.
  std::size_t add_arc(std::size_t from, std::size_t to, long capacity) {
    const std::size_t id = arcs_.size();
    arcs_.push_back({to, capacity});
    out_[from].push_back(id);
    arcs_.push_back({from, 0});
    out_[to].push_back(id + 1);
    return id;
  }

  long run(std::size_t source, std::size_t sink) {
    long total = 0;
    std::vector<char> seen(out_.size());
    while (true) {
      std::fill(seen.begin(), seen.end(), 0);
      const long pushed = augment(source, sink, kUnbounded, seen);
      if (pushed == 0) return total;
      total += pushed;
    }
  }

  long flow_on(std::size_t arc) const { return arcs_[arc ^ 1].residual; }

 private:
  static constexpr long kUnbounded = 1L << 40;

  struct Arc {
    std::size_t to;
    long residual;
  };

  long augment(std::size_t at, std::size_t sink, long limit, std::vector<char>& seen) {
    if (at == sink) return limit;
    seen[at] = 1;
    for (std::size_t id : out_[at]) {
      Arc& arc = arcs_[id];
      if (arc.residual <= 0 || seen[arc.to]) continue;
      const long pushed = augment(arc.to, sink, std::min(limit, arc.residual), seen);
      if (pushed > 0) {
        arc.residual -= pushed;
        arcs_[id ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace bicl::detail
