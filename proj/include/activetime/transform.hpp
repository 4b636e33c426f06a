#pragma once

#include <vector>

#include "activetime/instance.hpp"
#include "activetime/lp.hpp"

namespace activetime {

struct TransformedSolution {
  FractionalSolution solution;
  /// Topmost nodes with x > 0, in left-to-right interval order.
  std::vector<int> topmost;
  /// Number of slot moves performed.
  int steps = 0;
};

/// Moves fractional openings downward until every node with x > 0 has all
/// of its strict descendants fully open (x = L). Each step takes the
/// deepest unsaturated node i2 (ties: lowest pre-order index) below some
/// open ancestor, picks its nearest ancestor i1 with x(i1) > 0, and moves
/// theta = min(L(i2) - x(i2), x(i1)) of opening plus the proportional share
/// theta / x(i1) of every y(i1, j) from i1 to i2.
///
/// Throws InfeasibleInput when `solution` breaks any node-LP constraint.
TransformedSolution push_down(const NodeLp& lp, const LaminarTree& tree,
                              const FractionalSolution& solution);

/// Topmost open set I of a pushed-down solution. Throws PropertyViolation
/// naming the first of these that fails: nested (no node of I above
/// another), covers-leaves, positive, descendants-full, ancestors-closed.
std::vector<int> topmost_open(const FractionalSolution& solution, const LaminarTree& tree);

}  // namespace activetime
