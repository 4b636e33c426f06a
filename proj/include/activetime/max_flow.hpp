#pragma once

#include <cstdint>
#include <vector>

namespace activetime {

/// Dinic's algorithm on integer capacities. Arcs are explored in insertion
/// order, so the resulting flow is a deterministic function of the input.
class MaxFlow {
 public:
  explicit MaxFlow(int num_nodes);

  /// Returns an arc id usable with flow().
  int add_arc(int from, int to, std::int64_t capacity);
  std::int64_t run(int source, int sink);

  std::int64_t flow(int arc) const;
  /// Nodes reachable from the source in the final residual network.
  std::vector<bool> source_side(int source) const;

 private:
  struct Arc {
    int to;
    std::int64_t residual;
  };
  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<std::int64_t> capacity_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
};

}  // namespace activetime
