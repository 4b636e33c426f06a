#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace activetime {

/// Half-open range of time slots [begin, end).
struct Interval {
  int begin = 0;
  int end = 0;

  int length() const { return end - begin; }
  bool contains(int slot) const { return begin <= slot && slot < end; }
  bool contains(const Interval& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool disjoint(const Interval& other) const {
    return end <= other.begin || other.end <= begin;
  }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct Job {
  std::string id;
  int release = 0;
  int deadline = 0;
  int length = 1;

  Interval window() const { return {release, deadline}; }
  friend bool operator==(const Job&, const Job&) = default;
};

/// A set of jobs with laminar windows sharing `g` parallel machines.
struct Instance {
  int g = 1;
  std::vector<Job> jobs;

  /// max_j d_j, or 0 when there are no jobs.
  int horizon() const;
  long long total_work() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

/// Checks ids, windows and laminarity; throws Error on the first problem.
void validate(const Instance& instance);

/// Parses the line format ("g <int>", "job <id> <r> <d> <p>", '#' comments)
/// and validates the result.
Instance parse_instance(std::string_view text);
Instance parse_instance(std::istream& in);

std::string serialize(const Instance& instance);

struct TreeNode {
  Interval interval;
  int parent = -1;
  int depth = 0;
  std::vector<int> children;
  /// Slots of `interval` not covered by any child, ascending.
  std::vector<int> private_pool;
  /// Indices into Instance::jobs whose window equals `interval`.
  std::vector<int> jobs;
  /// Number of nodes in the subtree rooted here, this node included.
  int subtree_size = 1;
  bool synthetic = false;
};

/// The laminar window family as a rooted tree. Nodes are numbered in
/// pre-order, so the subtree of node i is the contiguous index range
/// [i, i + subtree_size).
class LaminarTree {
 public:
  static LaminarTree build(const Instance& instance);

  int size() const { return static_cast<int>(nodes_.size()); }
  const TreeNode& node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const std::vector<TreeNode>& nodes() const { return nodes_; }
  int root() const { return 0; }

  /// L(i), the number of private slots of node i.
  int private_capacity(int i) const {
    return static_cast<int>(node(i).private_pool.size());
  }
  /// K(j), the node whose interval equals job j's window.
  int job_node(int job) const { return job_node_[static_cast<std::size_t>(job)]; }

  /// True when `ancestor` is `descendant` or lies above it.
  bool is_ancestor(int ancestor, int descendant) const {
    return ancestor <= descendant && descendant < ancestor + node(ancestor).subtree_size;
  }
  /// Des(i) in pre-order, i included.
  std::vector<int> descendants(int i) const;
  /// Anc(i) from i up to the root, i included.
  std::vector<int> ancestors(int i) const;
  /// J(Anc(i)): jobs that may run in node i's private slots.
  std::vector<int> jobs_above(int i) const;
  /// J(Des(i)): jobs whose window lies inside node i's interval.
  std::vector<int> jobs_below(int i) const;
  bool is_leaf(int i) const { return node(i).children.empty(); }
  std::vector<int> leaves() const;

  /// One line per node; used by the CLI.
  std::string summary() const;

 private:
  std::vector<TreeNode> nodes_;
  std::vector<int> job_node_;
};

}  // namespace activetime
