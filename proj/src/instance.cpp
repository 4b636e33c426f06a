#include "activetime/instance.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <numeric>
#include <set>
#include <sstream>

#include "activetime/error.hpp"
#include "tokens.hpp"

namespace activetime {

int Instance::horizon() const {
  int t = 0;
  for (const Job& job : jobs) t = std::max(t, job.deadline);
  return t;
}

long long Instance::total_work() const {
  long long work = 0;
  for (const Job& job : jobs) work += job.length;
  return work;
}

void validate(const Instance& instance) {
  if (instance.g < 1) {
    throw Error(ErrorCode::MalformedLine, "machine capacity g must be >= 1");
  }
  if (instance.jobs.empty()) {
    throw Error(ErrorCode::EmptyInstance, "instance has no jobs");
  }
  std::set<std::string> ids;
  for (const Job& job : instance.jobs) {
    if (!ids.insert(job.id).second) {
      throw Error(ErrorCode::DuplicateJobId, "job id '" + job.id + "' appears twice");
    }
    if (job.release < 0 || job.length < 1 || job.deadline < job.release + job.length) {
      throw Error(ErrorCode::InvalidWindow,
                  "job '" + job.id + "' with window [" + std::to_string(job.release) + "," +
                      std::to_string(job.deadline) + ") cannot hold length " +
                      std::to_string(job.length));
    }
  }
  // Sorted by (begin asc, end desc), a laminar family nests like brackets:
  // after dropping stacked windows that end before w starts, the top of the
  // stack must contain w.
  std::vector<int> order(instance.jobs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Interval wa = instance.jobs[a].window();
    const Interval wb = instance.jobs[b].window();
    return wa.begin != wb.begin ? wa.begin < wb.begin : wa.end > wb.end;
  });
  std::vector<int> stack;
  for (int j : order) {
    const Interval w = instance.jobs[j].window();
    while (!stack.empty() && instance.jobs[stack.back()].deadline <= w.begin) stack.pop_back();
    if (!stack.empty() && !instance.jobs[stack.back()].window().contains(w)) {
      throw Error(ErrorCode::NonLaminar, "windows of jobs '" + instance.jobs[stack.back()].id +
                                             "' and '" + instance.jobs[j].id + "' cross");
    }
    stack.push_back(j);
  }
}

Instance parse_instance(std::string_view text) {
  Instance instance;
  bool seen_g = false;
  detail::for_each_directive(text, [&](int line_no, const std::vector<std::string_view>& tokens) {
    if (tokens[0] == "g" && tokens.size() == 2) {
      if (seen_g) throw Error(ErrorCode::MalformedLine, "line " + std::to_string(line_no) + ": repeated g");
      instance.g = detail::parse_int(tokens[1], line_no);
      seen_g = true;
    } else if (tokens[0] == "job" && tokens.size() == 5) {
      instance.jobs.push_back(Job{std::string(tokens[1]), detail::parse_int(tokens[2], line_no),
                                  detail::parse_int(tokens[3], line_no),
                                  detail::parse_int(tokens[4], line_no)});
    } else {
      detail::malformed(line_no, tokens);
    }
  });
  if (!seen_g) throw Error(ErrorCode::MalformedLine, "missing 'g <int>' directive");
  validate(instance);
  return instance;
}

Instance parse_instance(std::istream& in) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_instance(text);
}

std::string serialize(const Instance& instance) {
  std::ostringstream out;
  out << "g " << instance.g << '\n';
  for (const Job& job : instance.jobs) {
    out << "job " << job.id << ' ' << job.release << ' ' << job.deadline << ' ' << job.length
        << '\n';
  }
  return out.str();
}

LaminarTree LaminarTree::build(const Instance& instance) {
  validate(instance);

  // Sorting by (begin asc, end desc) lists every window before the windows
  // it contains, which is exactly pre-order.
  std::vector<Interval> windows;
  for (const Job& job : instance.jobs) windows.push_back(job.window());
  std::sort(windows.begin(), windows.end(), [](const Interval& a, const Interval& b) {
    return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
  });
  windows.erase(std::unique(windows.begin(), windows.end()), windows.end());

  std::vector<int> parent(windows.size(), -1);
  std::vector<int> stack;
  int top_level = 0;
  for (int w = 0; w < static_cast<int>(windows.size()); ++w) {
    while (!stack.empty() && !windows[stack.back()].contains(windows[w])) stack.pop_back();
    if (stack.empty()) {
      ++top_level;
    } else {
      parent[w] = stack.back();
    }
    stack.push_back(w);
  }

  LaminarTree tree;
  const int offset = top_level > 1 ? 1 : 0;
  if (offset == 1) {
    TreeNode root;
    root.interval = {0, instance.horizon()};
    root.synthetic = true;
    tree.nodes_.push_back(root);
  }
  for (int w = 0; w < static_cast<int>(windows.size()); ++w) {
    TreeNode node;
    node.interval = windows[w];
    node.parent = parent[w] >= 0 ? parent[w] + offset : (offset == 1 ? 0 : -1);
    tree.nodes_.push_back(node);
  }
  for (int i = 1; i < tree.size(); ++i) {
    TreeNode& node = tree.nodes_[i];
    node.depth = tree.nodes_[node.parent].depth + 1;
    tree.nodes_[node.parent].children.push_back(i);
  }
  for (int i = tree.size() - 1; i >= 1; --i) {
    tree.nodes_[tree.nodes_[i].parent].subtree_size += tree.nodes_[i].subtree_size;
  }
  for (TreeNode& node : tree.nodes_) {
    std::vector<bool> covered(static_cast<std::size_t>(node.interval.length()), false);
    for (int child : node.children) {
      const Interval& c = tree.nodes_[child].interval;
      for (int t = c.begin; t < c.end; ++t) covered[t - node.interval.begin] = true;
    }
    for (int t = node.interval.begin; t < node.interval.end; ++t) {
      if (!covered[t - node.interval.begin]) node.private_pool.push_back(t);
    }
  }

  tree.job_node_.resize(instance.jobs.size());
  for (int j = 0; j < static_cast<int>(instance.jobs.size()); ++j) {
    auto it = std::lower_bound(windows.begin(), windows.end(), instance.jobs[j].window(),
                               [](const Interval& a, const Interval& b) {
                                 return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
                               });
    int node = static_cast<int>(it - windows.begin()) + offset;
    tree.job_node_[j] = node;
    tree.nodes_[node].jobs.push_back(j);
  }
  return tree;
}

std::vector<int> LaminarTree::descendants(int i) const {
  std::vector<int> result(static_cast<std::size_t>(node(i).subtree_size));
  std::iota(result.begin(), result.end(), i);
  return result;
}

std::vector<int> LaminarTree::ancestors(int i) const {
  std::vector<int> result;
  for (int a = i; a >= 0; a = node(a).parent) result.push_back(a);
  return result;
}

std::vector<int> LaminarTree::jobs_above(int i) const {
  std::vector<int> result;
  for (int a : ancestors(i)) {
    result.insert(result.end(), node(a).jobs.begin(), node(a).jobs.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> LaminarTree::jobs_below(int i) const {
  std::vector<int> result;
  for (int d = i; d < i + node(i).subtree_size; ++d) {
    result.insert(result.end(), node(d).jobs.begin(), node(d).jobs.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> LaminarTree::leaves() const {
  std::vector<int> result;
  for (int i = 0; i < size(); ++i) {
    if (is_leaf(i)) result.push_back(i);
  }
  return result;
}

std::string LaminarTree::summary() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    const TreeNode& n = node(i);
    out << std::string(static_cast<std::size_t>(2 * n.depth), ' ') << "node " << i << " ["
        << n.interval.begin << "," << n.interval.end << ") L=" << n.private_pool.size()
        << " jobs=" << n.jobs.size() << (n.synthetic ? " (synthetic root)" : "") << '\n';
  }
  return out.str();
}

}  // namespace activetime
