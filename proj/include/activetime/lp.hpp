#pragma once

#include <optional>
#include <string>
#include <vector>

#include "activetime/instance.hpp"
#include "activetime/rational.hpp"
#include "activetime/simplex.hpp"

namespace activetime {

/// Node-indexed fractional solution: x[i] slots opened in node i and
/// y[i][j] units of job j placed there (zero where j may not run in i).
struct FractionalSolution {
  std::vector<Rational> x;
  std::vector<std::vector<Rational>> y;

  Rational total() const;
  friend bool operator==(const FractionalSolution&, const FractionalSolution&) = default;
};

/// Smallest number of slots (capped at 3) inside node i's interval that can
/// host the jobs of i's subtree on their own. Throws InfeasibleSubinstance
/// when even the whole interval is not enough.
int opt_lower_bound(const LaminarTree& tree, const Instance& instance, int node);

/// The strengthened node LP:
///   min sum_i x(i)
///   sum_{i in Des(K(j))} y(i,j) >= p_j          per job
///   sum_{j in J(Anc(i))} y(i,j) <= g x(i)       per node
///   x(i) <= L(i),  y(i,j) <= x(i)
///   sum_{i' in Des(i)} x(i') >= 2 (resp. 3)     when OPT_i >= 2 (resp. 3)
/// y(i,j) only exists for j in J(Anc(i)).
struct NodeLp {
  LpProblem problem;
  std::vector<int> x_var;               // per node
  std::vector<std::vector<int>> y_var;  // [node][job], -1 when omitted
  std::vector<int> opt_bounds;          // opt_lower_bound per node

  FractionalSolution extract(const LpSolution& solution) const;
  std::vector<Rational> flatten(const FractionalSolution& solution) const;
};

NodeLp build_node_lp(const LaminarTree& tree, const Instance& instance);

/// Exact check of every node-LP constraint, including zero y outside
/// J(Anc(i)). Returns the first violated constraint's name.
std::optional<std::string> node_lp_violation(const NodeLp& lp, const LaminarTree& tree,
                                             const FractionalSolution& solution);

/// Minimum slots job must spend inside `interval` even if every slot
/// outside it were available: max(0, p - |window \ interval|).
int q_forced(const Job& job, const Interval& interval);

/// Time-indexed LP with interval ceiling constraints
///   sum_{t in I} x(t) >= ceil(sum_j q_j(I) / g)  for all I = [t1,t2).
struct CwLp {
  LpProblem problem;
  std::vector<int> x_var;               // per slot
  std::vector<std::vector<int>> y_var;  // [slot][job], -1 outside the window
};

CwLp build_cw_lp(const Instance& instance);

/// Time-indexed values x[t], y[t][j].
struct SlotAssignment {
  std::vector<Rational> x;
  std::vector<std::vector<Rational>> y;
};

std::vector<Rational> flatten(const CwLp& lp, const SlotAssignment& assignment);

}  // namespace activetime
