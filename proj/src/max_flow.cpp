#include "activetime/max_flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace activetime {

MaxFlow::MaxFlow(int num_nodes) : adjacency_(static_cast<std::size_t>(num_nodes)) {}

int MaxFlow::add_arc(int from, int to, std::int64_t capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  capacity_.push_back(capacity);
  capacity_.push_back(0);
  adjacency_[static_cast<std::size_t>(from)].push_back(id);
  adjacency_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

bool MaxFlow::build_levels(int source, int sink) {
  level_.assign(adjacency_.size(), -1);
  std::queue<int> queue;
  level_[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int id : adjacency_[static_cast<std::size_t>(v)]) {
      const Arc& arc = arcs_[static_cast<std::size_t>(id)];
      if (arc.residual > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
        level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(v)] + 1;
        queue.push(arc.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t MaxFlow::push(int node, int sink, std::int64_t limit) {
  if (node == sink) return limit;
  auto& out = adjacency_[static_cast<std::size_t>(node)];
  for (std::size_t& k = cursor_[static_cast<std::size_t>(node)]; k < out.size(); ++k) {
    const int id = out[k];
    Arc& arc = arcs_[static_cast<std::size_t>(id)];
    if (arc.residual <= 0 ||
        level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(node)] + 1) {
      continue;
    }
    std::int64_t pushed = push(arc.to, sink, std::min(limit, arc.residual));
    if (pushed > 0) {
      arc.residual -= pushed;
      arcs_[static_cast<std::size_t>(id ^ 1)].residual += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    cursor_.assign(adjacency_.size(), 0);
    while (std::int64_t pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += pushed;
    }
  }
  return total;
}

std::int64_t MaxFlow::flow(int arc) const {
  return capacity_[static_cast<std::size_t>(arc)] - arcs_[static_cast<std::size_t>(arc)].residual;
}

std::vector<bool> MaxFlow::source_side(int source) const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<int> stack{source};
  seen[static_cast<std::size_t>(source)] = true;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int id : adjacency_[static_cast<std::size_t>(v)]) {
      const Arc& arc = arcs_[static_cast<std::size_t>(id)];
      if (arc.residual > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
        seen[static_cast<std::size_t>(arc.to)] = true;
        stack.push_back(arc.to);
      }
    }
  }
  return seen;
}

}  // namespace activetime
