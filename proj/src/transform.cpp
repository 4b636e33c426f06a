#include "activetime/transform.hpp"

#include "activetime/error.hpp"

namespace activetime {

namespace {

// Deepest unsaturated node that has an open strict ancestor, or -1.
int next_receiver(const FractionalSolution& s, const LaminarTree& tree) {
  int best = -1;
  for (int i = 0; i < tree.size(); ++i) {
    if (s.x[i] >= tree.private_capacity(i)) continue;
    bool open_above = false;
    for (int a = tree.node(i).parent; a >= 0 && !open_above; a = tree.node(a).parent) {
      open_above = s.x[a] > 0;
    }
    if (open_above && (best < 0 || tree.node(i).depth > tree.node(best).depth)) best = i;
  }
  return best;
}

}  // namespace

TransformedSolution push_down(const NodeLp& lp, const LaminarTree& tree,
                              const FractionalSolution& solution) {
  if (auto violation = node_lp_violation(lp, tree, solution)) {
    throw Error(ErrorCode::InfeasibleInput, "input violates " + *violation);
  }
  TransformedSolution out;
  out.solution = solution;
  FractionalSolution& s = out.solution;
  const long long step_limit = static_cast<long long>(tree.size()) * tree.size();

  for (int receiver = next_receiver(s, tree); receiver >= 0; receiver = next_receiver(s, tree)) {
    int donor = tree.node(receiver).parent;
    while (s.x[donor] == 0) donor = tree.node(donor).parent;

    const Rational room = tree.private_capacity(receiver) - s.x[receiver];
    const Rational theta = room < s.x[donor] ? room : s.x[donor];
    const Rational share = theta / s.x[donor];
    for (std::size_t j = 0; j < s.y[donor].size(); ++j) {
      if (s.y[donor][j] == 0) continue;
      const Rational moved = share * s.y[donor][j];
      s.y[receiver][j] += moved;
      s.y[donor][j] -= moved;
    }
    s.x[donor] -= theta;
    s.x[receiver] += theta;
    if (++out.steps > step_limit) {
      throw Error(ErrorCode::PropertyViolation, "push-down exceeded m^2 steps");
    }
  }
  out.topmost = topmost_open(s, tree);
  return out;
}

std::vector<int> topmost_open(const FractionalSolution& s, const LaminarTree& tree) {
  std::vector<int> topmost;
  for (int i = 0; i < tree.size(); ++i) {
    if (s.x[i] <= 0) continue;
    bool open_above = false;
    for (int a = tree.node(i).parent; a >= 0 && !open_above; a = tree.node(a).parent) {
      open_above = s.x[a] > 0;
    }
    if (!open_above) topmost.push_back(i);
  }
  // Pre-order over disjoint subtrees is already left-to-right.

  auto fail = [](const char* property, const std::string& detail) {
    throw Error(ErrorCode::PropertyViolation, std::string(property) + ": " + detail);
  };
  for (std::size_t a = 0; a < topmost.size(); ++a) {
    for (std::size_t b = 0; b < topmost.size(); ++b) {
      if (a != b && tree.is_ancestor(topmost[a], topmost[b])) {
        fail("nested", "node " + std::to_string(topmost[a]) + " lies above " + std::to_string(topmost[b]));
      }
    }
  }
  for (int leaf : tree.leaves()) {
    bool covered = false;
    for (int i : topmost) covered = covered || tree.is_ancestor(i, leaf);
    if (!covered) fail("covers-leaves", "leaf " + std::to_string(leaf) + " is below no open node");
  }
  for (int i : topmost) {
    if (s.x[i] <= 0) fail("positive", "node " + std::to_string(i));
    for (int d = i + 1; d < i + tree.node(i).subtree_size; ++d) {
      if (s.x[d] != tree.private_capacity(d)) {
        fail("descendants-full", "node " + std::to_string(d) + " below " + std::to_string(i));
      }
    }
    for (int a = tree.node(i).parent; a >= 0; a = tree.node(a).parent) {
      if (s.x[a] != 0) fail("ancestors-closed", "node " + std::to_string(a) + " above " + std::to_string(i));
    }
  }
  return topmost;
}

}  // namespace activetime
