#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "activetime/instance.hpp"

namespace activetime {

/// A concrete schedule: the slots each job runs in, plus the slots that
/// host at least one job.
struct Schedule {
  std::vector<std::vector<int>> assignment;  // per job, ascending
  std::vector<int> active_slots;             // ascending
};

/// A job subset J' whose demand exceeds what the opening can supply:
/// sum_i min(|J'(Anc(i))|, g) * x(i) < p(J').
struct CutCertificate {
  std::vector<int> jobs;         // J', ascending job indices
  std::vector<int> per_node_cap; // min(|J'(Anc(i))|, g) per node
  long long lhs = 0;
  long long rhs = 0;
};

using OpeningVerdict = std::variant<Schedule, CutCertificate>;

/// Decides whether `opening` (slots per tree node, each <= L(i)) can host
/// every job, via max flow source -> jobs -> tree nodes -> sink. On success
/// the flow is turned into a schedule on the earliest private slots of each
/// node; otherwise the source side of the residual network yields J'.
OpeningVerdict check_opening(std::span<const int> opening, const LaminarTree& tree,
                             const Instance& instance);

/// Time-indexed flow test: can the jobs run using only `slots`?
bool check_slots(std::span<const int> slots, const Instance& instance);
/// Same test with the open slots given as a bitmask (horizon <= 64).
bool check_slot_mask(std::uint64_t mask, const Instance& instance);

/// sum_i min(|J'(Anc(i))|, g) * opening(i) for one subset.
long long cut_capacity(std::span<const int> subset, std::span<const int> opening,
                       const LaminarTree& tree, const Instance& instance);

/// Enumerates every job subset (at most `max_jobs` jobs allowed, else
/// SubsetLimitExceeded) and returns the first whose demand exceeds its cut
/// capacity.
std::optional<std::vector<int>> find_violating_subset(std::span<const int> opening,
                                                      const LaminarTree& tree,
                                                      const Instance& instance, int max_jobs);

/// True when the subset enumeration and check_opening agree on feasibility.
bool verify_cut_condition(std::span<const int> opening, const LaminarTree& tree,
                          const Instance& instance, int max_jobs);

/// Independent validator: windows, distinct slots, lengths, capacity g and
/// the active-slot list. Returns a description of the first problem.
std::optional<std::string> schedule_error(const Schedule& schedule, const Instance& instance);

/// "slot <t>: <job ids...>" per active slot, ascending.
std::string serialize(const Schedule& schedule, const Instance& instance);

}  // namespace activetime
