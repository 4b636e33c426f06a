#include "activetime/simplex.hpp"

#include <sstream>
#include <stdexcept>

namespace activetime {

int LpProblem::add_variable(std::string name, Rational lower, std::optional<Rational> upper) {
  variables_.push_back(Variable{std::move(name), std::move(lower), std::move(upper)});
  objective_.emplace_back(0);
  return num_variables() - 1;
}

void LpProblem::add_constraint(std::string name, std::vector<Term> terms, Relation relation,
                               Rational rhs) {
  for (const Term& term : terms) {
    if (term.var < 0 || term.var >= num_variables()) {
      throw std::out_of_range("constraint '" + name + "' references an undeclared variable");
    }
  }
  constraints_.push_back(Constraint{std::move(name), std::move(terms), relation, std::move(rhs)});
}

void LpProblem::set_objective_coef(int var, Rational coef) {
  objective_.at(static_cast<std::size_t>(var)) = std::move(coef);
}

Rational LpProblem::objective_value(const std::vector<Rational>& values) const {
  Rational total = 0;
  for (std::size_t k = 0; k < objective_.size(); ++k) total += objective_[k] * values[k];
  return total;
}

std::optional<std::string> LpProblem::first_violation(const std::vector<Rational>& values) const {
  if (values.size() != variables_.size()) return "assignment has the wrong length";
  for (std::size_t k = 0; k < variables_.size(); ++k) {
    const Variable& v = variables_[k];
    if (values[k] < v.lower || (v.upper && values[k] > *v.upper)) return "bounds of " + v.name;
  }
  for (const Constraint& c : constraints_) {
    Rational lhs = 0;
    for (const Term& t : c.terms) lhs += t.coef * values[static_cast<std::size_t>(t.var)];
    bool ok = c.relation == Relation::LessEqual      ? lhs <= c.rhs
              : c.relation == Relation::GreaterEqual ? lhs >= c.rhs
                                                     : lhs == c.rhs;
    if (!ok) return c.name;
  }
  return std::nullopt;
}

std::string LpProblem::to_string() const {
  std::ostringstream out;
  out << "minimize";
  for (std::size_t k = 0; k < objective_.size(); ++k) {
    if (objective_[k] != 0) out << " + " << activetime::to_string(objective_[k]) << " " << variables_[k].name;
  }
  out << '\n';
  for (const Variable& v : variables_) {
    out << "var " << v.name << " >= " << activetime::to_string(v.lower);
    if (v.upper) out << " <= " << activetime::to_string(*v.upper);
    out << '\n';
  }
  for (const Constraint& c : constraints_) {
    out << "con " << c.name << ":";
    for (const Term& t : c.terms) {
      out << " + " << activetime::to_string(t.coef) << " " << variables_[static_cast<std::size_t>(t.var)].name;
    }
    out << (c.relation == Relation::LessEqual ? " <= " : c.relation == Relation::GreaterEqual ? " >= " : " = ")
        << activetime::to_string(c.rhs) << '\n';
  }
  return out.str();
}

namespace {

class Tableau {
 public:
  std::vector<std::vector<Rational>> rows;  // last entry of each row is the rhs
  std::vector<int> basis;
  std::vector<Rational> cost;  // reduced costs; last entry is -objective
  int columns = 0;

  void pivot(std::size_t r, int c) {
    std::vector<Rational>& prow = rows[r];
    const Rational inv = 1 / prow[static_cast<std::size_t>(c)];
    std::vector<int> nonzero;
    for (int k = 0; k <= columns; ++k) {
      Rational& v = prow[static_cast<std::size_t>(k)];
      if (v != 0) {
        v *= inv;
        nonzero.push_back(k);
      }
    }
    auto eliminate = [&](std::vector<Rational>& row) {
      const Rational factor = row[static_cast<std::size_t>(c)];
      if (factor == 0) return;
      for (int k : nonzero) row[static_cast<std::size_t>(k)] -= factor * prow[static_cast<std::size_t>(k)];
    };
    for (std::size_t other = 0; other < rows.size(); ++other) {
      if (other != r) eliminate(rows[other]);
    }
    eliminate(cost);
    basis[r] = c;
  }

  // Bland's rule over columns in [0, allowed). Returns false when unbounded.
  bool optimize(int allowed) {
    for (;;) {
      int entering = -1;
      for (int c = 0; c < allowed; ++c) {
        if (cost[static_cast<std::size_t>(c)] < 0) {
          entering = c;
          break;
        }
      }
      if (entering < 0) return true;
      std::size_t leaving = rows.size();
      Rational best_ratio;
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Rational& a = rows[r][static_cast<std::size_t>(entering)];
        if (a <= 0) continue;
        Rational ratio = rows[r].back() / a;
        if (leaving == rows.size() || ratio < best_ratio ||
            (ratio == best_ratio && basis[r] < basis[leaving])) {
          leaving = r;
          best_ratio = ratio;
        }
      }
      if (leaving == rows.size()) return false;
      pivot(leaving, entering);
    }
  }

  void price(const std::vector<Rational>& costs) {
    cost.assign(static_cast<std::size_t>(columns) + 1, Rational(0));
    for (int c = 0; c < columns; ++c) cost[static_cast<std::size_t>(c)] = costs[static_cast<std::size_t>(c)];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rational cb = costs[static_cast<std::size_t>(basis[r])];
      if (cb == 0) continue;
      for (int c = 0; c <= columns; ++c) {
        const Rational& a = rows[r][static_cast<std::size_t>(c)];
        if (a != 0) cost[static_cast<std::size_t>(c)] -= cb * a;
      }
    }
  }
};

}  // namespace

LpSolution solve(const LpProblem& problem) {
  const auto& vars = problem.variables();
  const int n = problem.num_variables();

  // Shift every variable to a zero lower bound; upper bounds become rows.
  struct Row {
    std::vector<Rational> coef;
    Relation relation;
    Rational rhs;
  };
  std::vector<Row> rows;
  for (int k = 0; k < n; ++k) {
    const Variable& v = vars[static_cast<std::size_t>(k)];
    if (v.upper) {
      Row row{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), Relation::LessEqual,
              *v.upper - v.lower};
      row.coef[static_cast<std::size_t>(k)] = 1;
      rows.push_back(std::move(row));
    }
  }
  for (const Constraint& c : problem.constraints()) {
    Row row{std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)), c.relation, c.rhs};
    for (const Term& t : c.terms) {
      row.coef[static_cast<std::size_t>(t.var)] += t.coef;
      row.rhs -= t.coef * vars[static_cast<std::size_t>(t.var)].lower;
    }
    rows.push_back(std::move(row));
  }
  for (Row& row : rows) {
    if (row.rhs < 0) {
      for (Rational& a : row.coef) a = -a;
      row.rhs = -row.rhs;
      if (row.relation == Relation::LessEqual) {
        row.relation = Relation::GreaterEqual;
      } else if (row.relation == Relation::GreaterEqual) {
        row.relation = Relation::LessEqual;
      }
    }
  }

  // Column layout: structural, slack/surplus, artificial.
  int slack_count = 0;
  int artificial_count = 0;
  for (const Row& row : rows) {
    if (row.relation != Relation::Equal) ++slack_count;
    if (row.relation != Relation::LessEqual) ++artificial_count;
  }
  const int first_artificial = n + slack_count;
  Tableau tab;
  tab.columns = first_artificial + artificial_count;
  int next_slack = n;
  int next_artificial = first_artificial;
  for (const Row& row : rows) {
    std::vector<Rational> full(static_cast<std::size_t>(tab.columns) + 1, Rational(0));
    for (int k = 0; k < n; ++k) full[static_cast<std::size_t>(k)] = row.coef[static_cast<std::size_t>(k)];
    full.back() = row.rhs;
    int basic = -1;
    if (row.relation == Relation::LessEqual) {
      full[static_cast<std::size_t>(next_slack)] = 1;
      basic = next_slack++;
    } else {
      if (row.relation == Relation::GreaterEqual) full[static_cast<std::size_t>(next_slack++)] = -1;
      full[static_cast<std::size_t>(next_artificial)] = 1;
      basic = next_artificial++;
    }
    tab.rows.push_back(std::move(full));
    tab.basis.push_back(basic);
  }

  LpSolution solution;
  if (artificial_count > 0) {
    std::vector<Rational> phase1(static_cast<std::size_t>(tab.columns), Rational(0));
    for (int c = first_artificial; c < tab.columns; ++c) phase1[static_cast<std::size_t>(c)] = 1;
    tab.price(phase1);
    tab.optimize(tab.columns);
    if (tab.cost.back() != 0) {
      solution.status = LpStatus::Infeasible;
      return solution;
    }
    // Drive zero-level artificials out of the basis; rows where that is
    // impossible are redundant and dropped.
    for (std::size_t r = 0; r < tab.rows.size();) {
      if (tab.basis[r] < first_artificial) {
        ++r;
        continue;
      }
      int column = -1;
      for (int c = 0; c < first_artificial; ++c) {
        if (tab.rows[r][static_cast<std::size_t>(c)] != 0) {
          column = c;
          break;
        }
      }
      if (column >= 0) {
        tab.pivot(r, column);
        ++r;
      } else {
        tab.rows.erase(tab.rows.begin() + static_cast<std::ptrdiff_t>(r));
        tab.basis.erase(tab.basis.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
  }

  std::vector<Rational> phase2(static_cast<std::size_t>(tab.columns), Rational(0));
  for (int k = 0; k < n; ++k) phase2[static_cast<std::size_t>(k)] = problem.objective()[static_cast<std::size_t>(k)];
  tab.price(phase2);
  if (!tab.optimize(first_artificial)) {
    solution.status = LpStatus::Unbounded;
    return solution;
  }

  solution.status = LpStatus::Optimal;
  solution.values.assign(static_cast<std::size_t>(n), Rational(0));
  for (std::size_t r = 0; r < tab.rows.size(); ++r) {
    if (tab.basis[r] < n) solution.values[static_cast<std::size_t>(tab.basis[r])] = tab.rows[r].back();
  }
  for (int k = 0; k < n; ++k) solution.values[static_cast<std::size_t>(k)] += vars[static_cast<std::size_t>(k)].lower;
  solution.value = problem.objective_value(solution.values);
  return solution;
}

}  // namespace activetime
