#include "activetime/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "activetime/error.hpp"
#include "activetime/feasibility.hpp"

namespace activetime {

OracleResult optimal_active_time(const Instance& instance, const OracleLimits& limits) {
  const int horizon = instance.horizon();
  if (horizon > std::min(limits.max_horizon, 64)) {
    throw Error(ErrorCode::HorizonTooLarge,
                "horizon " + std::to_string(horizon) + " exceeds " + std::to_string(limits.max_horizon));
  }
  const std::uint64_t everything = horizon == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << horizon) - 1;
  if (!check_slot_mask(everything, instance)) {
    throw Error(ErrorCode::Infeasible, "instance is infeasible even with every slot open");
  }

  std::uint64_t forced = 0;
  for (const Job& job : instance.jobs) {
    if (job.window().length() == job.length) {
      for (int t = job.release; t < job.deadline; ++t) forced |= std::uint64_t{1} << t;
    }
  }
  std::vector<int> free_slots;
  for (int t = 0; t < horizon; ++t) {
    if (!(forced >> t & 1)) free_slots.push_back(t);
  }
  const int forced_count = std::popcount(forced);
  const long long work = instance.total_work();
  int longest = 0;
  for (const Job& job : instance.jobs) longest = std::max(longest, job.length);
  const int lower = std::max({forced_count, longest, static_cast<int>((work + instance.g - 1) / instance.g)});

  for (int k = std::max(lower, 1); k <= horizon; ++k) {
    if (k > limits.slot_budget) {
      throw Error(ErrorCode::BudgetExceeded, "optimum exceeds " + std::to_string(limits.slot_budget) + " slots");
    }
    const int pick = k - forced_count;
    const int pool = static_cast<int>(free_slots.size());
    if (pick > pool) break;
    // Lexicographic k-subsets of the free slots; with the forced slots
    // common to all candidates this is also lexicographic on full sets.
    std::vector<int> index(pick);
    for (int a = 0; a < pick; ++a) index[a] = a;
    for (;;) {
      std::uint64_t mask = forced;
      for (int a : index) mask |= std::uint64_t{1} << free_slots[a];
      if (check_slot_mask(mask, instance)) {
        OracleResult result{k, {}};
        for (int t = 0; t < horizon; ++t) {
          if (mask >> t & 1) result.witness.push_back(t);
        }
        return result;
      }
      int a = pick - 1;
      while (a >= 0 && index[a] == pool - pick + a) --a;
      if (a < 0) break;
      ++index[a];
      for (int b = a + 1; b < pick; ++b) index[b] = index[b - 1] + 1;
    }
  }
  throw Error(ErrorCode::Infeasible, "no feasible slot set found");
}

bool is_minimal_feasible(std::span<const int> slots, const Instance& instance) {
  for (std::size_t drop = 0; drop < slots.size(); ++drop) {
    std::vector<int> rest;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (s != drop) rest.push_back(slots[s]);
    }
    if (check_slots(rest, instance)) return false;
  }
  return true;
}

}  // namespace activetime
