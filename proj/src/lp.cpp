#include "activetime/lp.hpp"

#include <algorithm>

#include "activetime/error.hpp"
#include "activetime/feasibility.hpp"

namespace activetime {

Rational FractionalSolution::total() const {
  Rational sum = 0;
  for (const Rational& v : x) sum += v;
  return sum;
}

int opt_lower_bound(const LaminarTree& tree, const Instance& instance, int node) {
  Instance sub;
  sub.g = instance.g;
  for (int j : tree.jobs_below(node)) sub.jobs.push_back(instance.jobs[j]);
  if (sub.jobs.empty()) return 1;

  const Interval span = tree.node(node).interval;
  std::vector<int> all;
  for (int t = span.begin; t < span.end; ++t) all.push_back(t);
  if (!check_slots(all, sub)) {
    throw Error(ErrorCode::InfeasibleSubinstance,
                "jobs inside [" + std::to_string(span.begin) + "," + std::to_string(span.end) +
                    ") cannot be scheduled even with every slot open");
  }
  for (int t = span.begin; t < span.end; ++t) {
    const int one[] = {t};
    if (check_slots(one, sub)) return 1;
  }
  for (int a = span.begin; a < span.end; ++a) {
    for (int b = a + 1; b < span.end; ++b) {
      const int two[] = {a, b};
      if (check_slots(two, sub)) return 2;
    }
  }
  return 3;
}

NodeLp build_node_lp(const LaminarTree& tree, const Instance& instance) {
  const int m = tree.size();
  const int n = static_cast<int>(instance.jobs.size());
  NodeLp lp;
  LpProblem& p = lp.problem;

  lp.x_var.resize(m);
  for (int i = 0; i < m; ++i) {
    lp.x_var[i] = p.add_variable("x[" + std::to_string(i) + "]", 0, Rational(tree.private_capacity(i)));
    p.set_objective_coef(lp.x_var[i], 1);
  }
  lp.y_var.assign(m, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) {
    for (int j : tree.jobs_above(i)) {
      lp.y_var[i][j] = p.add_variable("y[" + std::to_string(i) + "," + instance.jobs[j].id + "]");
    }
  }

  for (int j = 0; j < n; ++j) {
    std::vector<Term> terms;
    const int home = tree.job_node(j);
    for (int i = home; i < home + tree.node(home).subtree_size; ++i) terms.push_back({lp.y_var[i][j], 1});
    p.add_constraint("cover[" + instance.jobs[j].id + "]", std::move(terms), Relation::GreaterEqual,
                     instance.jobs[j].length);
  }
  for (int i = 0; i < m; ++i) {
    std::vector<Term> terms;
    for (int j : tree.jobs_above(i)) terms.push_back({lp.y_var[i][j], 1});
    terms.push_back({lp.x_var[i], -instance.g});
    p.add_constraint("capacity[" + std::to_string(i) + "]", std::move(terms), Relation::LessEqual, 0);
  }
  for (int i = 0; i < m; ++i) {
    for (int j : tree.jobs_above(i)) {
      p.add_constraint("y<=x[" + std::to_string(i) + "," + instance.jobs[j].id + "]",
                       {{lp.y_var[i][j], 1}, {lp.x_var[i], -1}}, Relation::LessEqual, 0);
    }
  }
  lp.opt_bounds.resize(m);
  for (int i = 0; i < m; ++i) {
    lp.opt_bounds[i] = opt_lower_bound(tree, instance, i);
    for (int bound = 2; bound <= lp.opt_bounds[i]; ++bound) {
      std::vector<Term> terms;
      for (int d = i; d < i + tree.node(i).subtree_size; ++d) terms.push_back({lp.x_var[d], 1});
      p.add_constraint("opt" + std::to_string(bound) + "[" + std::to_string(i) + "]", std::move(terms),
                       Relation::GreaterEqual, bound);
    }
  }
  return lp;
}

FractionalSolution NodeLp::extract(const LpSolution& solution) const {
  FractionalSolution out;
  out.x.resize(x_var.size());
  for (std::size_t i = 0; i < x_var.size(); ++i) out.x[i] = solution.values[x_var[i]];
  out.y.assign(y_var.size(), std::vector<Rational>(y_var.empty() ? 0 : y_var[0].size()));
  for (std::size_t i = 0; i < y_var.size(); ++i) {
    for (std::size_t j = 0; j < y_var[i].size(); ++j) {
      if (y_var[i][j] >= 0) out.y[i][j] = solution.values[y_var[i][j]];
    }
  }
  return out;
}

std::vector<Rational> NodeLp::flatten(const FractionalSolution& solution) const {
  std::vector<Rational> values(problem.num_variables());
  for (std::size_t i = 0; i < x_var.size(); ++i) values[x_var[i]] = solution.x[i];
  for (std::size_t i = 0; i < y_var.size(); ++i) {
    for (std::size_t j = 0; j < y_var[i].size(); ++j) {
      if (y_var[i][j] >= 0) values[y_var[i][j]] = solution.y[i][j];
    }
  }
  return values;
}

std::optional<std::string> node_lp_violation(const NodeLp& lp, const LaminarTree& tree,
                                             const FractionalSolution& solution) {
  if (solution.x.size() != lp.x_var.size() || solution.y.size() != lp.y_var.size()) {
    return "solution shape does not match the tree";
  }
  for (int i = 0; i < tree.size(); ++i) {
    if (solution.y[i].size() != lp.y_var[i].size()) return "solution shape does not match the jobs";
    for (std::size_t j = 0; j < lp.y_var[i].size(); ++j) {
      if (lp.y_var[i][j] < 0 && solution.y[i][j] != 0) {
        return "y[" + std::to_string(i) + "," + std::to_string(j) + "] must be zero";
      }
    }
  }
  return lp.problem.first_violation(lp.flatten(solution));
}

int q_forced(const Job& job, const Interval& interval) {
  const Interval window = job.window();
  const int inside = std::max(0, std::min(window.end, interval.end) - std::max(window.begin, interval.begin));
  const int outside = window.length() - inside;
  return std::max(0, job.length - outside);
}

CwLp build_cw_lp(const Instance& instance) {
  const int horizon = instance.horizon();
  const int n = static_cast<int>(instance.jobs.size());
  CwLp lp;
  LpProblem& p = lp.problem;
  lp.x_var.resize(horizon);
  for (int t = 0; t < horizon; ++t) {
    lp.x_var[t] = p.add_variable("x[" + std::to_string(t) + "]", 0, Rational(1));
    p.set_objective_coef(lp.x_var[t], 1);
  }
  lp.y_var.assign(horizon, std::vector<int>(n, -1));
  for (int t = 0; t < horizon; ++t) {
    for (int j = 0; j < n; ++j) {
      if (instance.jobs[j].window().contains(t)) {
        lp.y_var[t][j] = p.add_variable("y[" + std::to_string(t) + "," + instance.jobs[j].id + "]");
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<Term> terms;
    for (int t = instance.jobs[j].release; t < instance.jobs[j].deadline; ++t) terms.push_back({lp.y_var[t][j], 1});
    p.add_constraint("cover[" + instance.jobs[j].id + "]", std::move(terms), Relation::GreaterEqual,
                     instance.jobs[j].length);
  }
  for (int t = 0; t < horizon; ++t) {
    std::vector<Term> terms;
    for (int j = 0; j < n; ++j) {
      if (lp.y_var[t][j] >= 0) terms.push_back({lp.y_var[t][j], 1});
    }
    terms.push_back({lp.x_var[t], -instance.g});
    p.add_constraint("capacity[" + std::to_string(t) + "]", std::move(terms), Relation::LessEqual, 0);
  }
  for (int t = 0; t < horizon; ++t) {
    for (int j = 0; j < n; ++j) {
      if (lp.y_var[t][j] < 0) continue;
      p.add_constraint("y<=x[" + std::to_string(t) + "," + instance.jobs[j].id + "]",
                       {{lp.y_var[t][j], 1}, {lp.x_var[t], -1}}, Relation::LessEqual, 0);
    }
  }
  for (int t1 = 0; t1 < horizon; ++t1) {
    for (int t2 = t1 + 1; t2 <= horizon; ++t2) {
      long long forced = 0;
      for (const Job& job : instance.jobs) forced += q_forced(job, {t1, t2});
      const long long rhs = (forced + instance.g - 1) / instance.g;
      std::vector<Term> terms;
      for (int t = t1; t < t2; ++t) terms.push_back({lp.x_var[t], 1});
      p.add_constraint("ceiling[" + std::to_string(t1) + "," + std::to_string(t2) + ")", std::move(terms),
                       Relation::GreaterEqual, Rational(static_cast<long>(rhs)));
    }
  }
  return lp;
}

std::vector<Rational> flatten(const CwLp& lp, const SlotAssignment& assignment) {
  std::vector<Rational> values(lp.problem.num_variables());
  for (std::size_t t = 0; t < lp.x_var.size(); ++t) {
    values[lp.x_var[t]] = assignment.x[t];
    for (std::size_t j = 0; j < lp.y_var[t].size(); ++j) {
      if (lp.y_var[t][j] >= 0) values[lp.y_var[t][j]] = assignment.y[t][j];
    }
  }
  return values;
}

}  // namespace activetime
