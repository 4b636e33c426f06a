#pragma once

#include <span>
#include <vector>

#include "activetime/instance.hpp"

namespace activetime {

struct OracleResult {
  int opt = 0;
  std::vector<int> witness;  // ascending slots
};

struct OracleLimits {
  /// Largest slot count to try before giving up with BudgetExceeded.
  int slot_budget = 64;
  /// Largest horizon accepted (HorizonTooLarge beyond it, hard cap 64).
  int max_horizon = 24;
};

/// Exact minimum number of active slots. Tries k = 1, 2, ... and, for each
/// k, the k-subsets of [0, T) in lexicographic order; the first subset that
/// passes check_slots is returned. Slots forming the whole window of a
/// rigid job are in every feasible set and are fixed up front; sizes below
/// the work/capacity bound are skipped. Neither shortcut changes the
/// answer or the witness.
OracleResult optimal_active_time(const Instance& instance, const OracleLimits& limits = {});

/// True when closing any single slot of `slots` makes the instance infeasible.
bool is_minimal_feasible(std::span<const int> slots, const Instance& instance);

}  // namespace activetime
