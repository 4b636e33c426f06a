#include "activetime/feasibility.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "activetime/error.hpp"
#include "activetime/max_flow.hpp"

namespace activetime {

OpeningVerdict check_opening(std::span<const int> opening, const LaminarTree& tree,
                             const Instance& instance) {
  const int n = static_cast<int>(instance.jobs.size());
  const int m = tree.size();
  const int source = 0;
  const int sink = n + m + 1;
  auto job_vertex = [](int j) { return 1 + j; };
  auto node_vertex = [n](int i) { return 1 + n + i; };

  MaxFlow network(n + m + 2);
  for (int j = 0; j < n; ++j) network.add_arc(source, job_vertex(j), instance.jobs[j].length);
  // arcs[i] holds (job, arc id) for every job allowed in node i
  std::vector<std::vector<std::pair<int, int>>> arcs(m);
  for (int i = 0; i < m; ++i) {
    for (int j : tree.jobs_above(i)) {
      arcs[i].emplace_back(j, network.add_arc(job_vertex(j), node_vertex(i), opening[i]));
    }
  }
  for (int i = 0; i < m; ++i) {
    network.add_arc(node_vertex(i), sink, static_cast<std::int64_t>(instance.g) * opening[i]);
  }

  if (network.run(source, sink) == instance.total_work()) {
    Schedule schedule;
    schedule.assignment.resize(n);
    for (int i = 0; i < m; ++i) {
      if (opening[i] == 0) continue;
      const auto& pool = tree.node(i).private_pool;
      // Wrap-around placement: a job's units land in consecutive slots
      // modulo opening[i], so they are distinct, and no slot gets more
      // than g units because the node's inflow is at most g * opening[i].
      int cursor = 0;
      for (auto [j, arc] : arcs[i]) {
        for (std::int64_t unit = 0; unit < network.flow(arc); ++unit) {
          schedule.assignment[j].push_back(pool[cursor % opening[i]]);
          ++cursor;
        }
      }
    }
    std::set<int> active;
    for (auto& slots : schedule.assignment) {
      std::sort(slots.begin(), slots.end());
      active.insert(slots.begin(), slots.end());
    }
    schedule.active_slots.assign(active.begin(), active.end());
    return schedule;
  }

  const std::vector<bool> side = network.source_side(source);
  CutCertificate cert;
  for (int j = 0; j < n; ++j) {
    if (side[job_vertex(j)]) cert.jobs.push_back(j);
  }
  for (int j : cert.jobs) cert.rhs += instance.jobs[j].length;
  cert.per_node_cap.resize(m);
  for (int i = 0; i < m; ++i) {
    int above = 0;
    for (int j : cert.jobs) above += tree.is_ancestor(tree.job_node(j), i) ? 1 : 0;
    cert.per_node_cap[i] = std::min(above, instance.g);
    cert.lhs += static_cast<long long>(cert.per_node_cap[i]) * opening[i];
  }
  return cert;
}

bool check_slot_mask(std::uint64_t mask, const Instance& instance) {
  const int open = std::popcount(mask);
  if (static_cast<long long>(open) * instance.g < instance.total_work()) return false;
  std::vector<std::uint64_t> windows;
  windows.reserve(instance.jobs.size());
  for (const Job& job : instance.jobs) {
    std::uint64_t window = 0;
    for (int t = job.release; t < job.deadline; ++t) window |= std::uint64_t{1} << t;
    window &= mask;
    if (std::popcount(window) < job.length) return false;
    windows.push_back(window);
  }

  const int n = static_cast<int>(instance.jobs.size());
  const int horizon = instance.horizon();
  const int source = 0;
  const int sink = n + horizon + 1;
  MaxFlow network(n + horizon + 2);
  for (int j = 0; j < n; ++j) {
    network.add_arc(source, 1 + j, instance.jobs[j].length);
    for (std::uint64_t rest = windows[j]; rest != 0; rest &= rest - 1) {
      network.add_arc(1 + j, 1 + n + std::countr_zero(rest), 1);
    }
  }
  for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
    int t = std::countr_zero(rest);
    if (t < horizon) network.add_arc(1 + n + t, sink, instance.g);
  }
  return network.run(source, sink) == instance.total_work();
}

bool check_slots(std::span<const int> slots, const Instance& instance) {
  if (instance.horizon() > 64) {
    throw Error(ErrorCode::HorizonTooLarge, "slot test supports horizons up to 64");
  }
  std::uint64_t mask = 0;
  for (int t : slots) {
    if (t >= 0 && t < 64) mask |= std::uint64_t{1} << t;
  }
  return check_slot_mask(mask, instance);
}

long long cut_capacity(std::span<const int> subset, std::span<const int> opening,
                       const LaminarTree& tree, const Instance& instance) {
  long long total = 0;
  for (int i = 0; i < tree.size(); ++i) {
    int above = 0;
    for (int j : subset) above += tree.is_ancestor(tree.job_node(j), i) ? 1 : 0;
    total += static_cast<long long>(std::min(above, instance.g)) * opening[i];
  }
  return total;
}

std::optional<std::vector<int>> find_violating_subset(std::span<const int> opening,
                                                      const LaminarTree& tree,
                                                      const Instance& instance, int max_jobs) {
  const int n = static_cast<int>(instance.jobs.size());
  if (n > max_jobs || n > 30) {
    throw Error(ErrorCode::SubsetLimitExceeded,
                std::to_string(n) + " jobs exceed the enumeration limit of " +
                    std::to_string(std::min(max_jobs, 30)));
  }
  std::vector<std::uint32_t> above(tree.size(), 0);
  for (int i = 0; i < tree.size(); ++i) {
    for (int j : tree.jobs_above(i)) above[i] |= std::uint32_t{1} << j;
  }
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    long long demand = 0;
    for (int j = 0; j < n; ++j) {
      if (subset >> j & 1) demand += instance.jobs[j].length;
    }
    long long supply = 0;
    for (int i = 0; i < tree.size(); ++i) {
      supply += static_cast<long long>(std::min(std::popcount(subset & above[i]), instance.g)) *
                opening[i];
    }
    if (supply < demand) {
      std::vector<int> jobs;
      for (int j = 0; j < n; ++j) {
        if (subset >> j & 1) jobs.push_back(j);
      }
      return jobs;
    }
  }
  return std::nullopt;
}

bool verify_cut_condition(std::span<const int> opening, const LaminarTree& tree,
                          const Instance& instance, int max_jobs) {
  const bool subsets_infeasible =
      find_violating_subset(opening, tree, instance, max_jobs).has_value();
  const bool flow_infeasible =
      std::holds_alternative<CutCertificate>(check_opening(opening, tree, instance));
  return subsets_infeasible == flow_infeasible;
}

std::optional<std::string> schedule_error(const Schedule& schedule, const Instance& instance) {
  if (schedule.assignment.size() != instance.jobs.size()) return "assignment size mismatch";
  std::map<int, int> load;
  for (std::size_t j = 0; j < instance.jobs.size(); ++j) {
    const Job& job = instance.jobs[j];
    const auto& slots = schedule.assignment[j];
    if (static_cast<int>(slots.size()) != job.length) {
      return "job '" + job.id + "' runs " + std::to_string(slots.size()) + " units, needs " +
             std::to_string(job.length);
    }
    std::set<int> distinct(slots.begin(), slots.end());
    if (distinct.size() != slots.size()) return "job '" + job.id + "' uses a slot twice";
    for (int t : slots) {
      if (!job.window().contains(t)) {
        return "job '" + job.id + "' runs outside its window at slot " + std::to_string(t);
      }
      ++load[t];
    }
  }
  std::vector<int> active;
  for (auto [t, count] : load) {
    if (count > instance.g) return "slot " + std::to_string(t) + " hosts more than g jobs";
    active.push_back(t);
  }
  if (active != schedule.active_slots) return "active slot list does not match the assignment";
  return std::nullopt;
}

std::string serialize(const Schedule& schedule, const Instance& instance) {
  std::map<int, std::vector<int>> by_slot;
  for (std::size_t j = 0; j < schedule.assignment.size(); ++j) {
    for (int t : schedule.assignment[j]) by_slot[t].push_back(static_cast<int>(j));
  }
  std::ostringstream out;
  for (const auto& [t, jobs] : by_slot) {
    out << "slot " << t << ":";
    for (int j : jobs) out << ' ' << instance.jobs[j].id;
    out << '\n';
  }
  return out.str();
}

}  // namespace activetime
