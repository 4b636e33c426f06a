#pragma once

#include <optional>
#include <string>
#include <vector>

#include "activetime/rational.hpp"

namespace activetime {

enum class Relation { LessEqual, GreaterEqual, Equal };

struct Variable {
  std::string name;
  Rational lower = 0;
  std::optional<Rational> upper;
};

struct Term {
  int var = 0;
  Rational coef;
};

struct Constraint {
  std::string name;
  std::vector<Term> terms;
  Relation relation = Relation::LessEqual;
  Rational rhs;
};

/// A minimisation LP over exact rationals.
class LpProblem {
 public:
  int add_variable(std::string name, Rational lower = 0, std::optional<Rational> upper = {});
  void add_constraint(std::string name, std::vector<Term> terms, Relation relation, Rational rhs);
  void set_objective_coef(int var, Rational coef);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }

  Rational objective_value(const std::vector<Rational>& values) const;
  /// Name of the first bound or constraint `values` breaks, checked exactly.
  std::optional<std::string> first_violation(const std::vector<Rational>& values) const;

  /// Plain-text listing for debugging; not a stable format.
  std::string to_string() const;

 private:
  std::vector<Variable> variables_;
  std::vector<Constraint> constraints_;
  std::vector<Rational> objective_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> values;
};

/// Two-phase primal simplex on a dense tableau with Bland's rule. Exact and
/// deterministic: equal problems give equal solutions.
LpSolution solve(const LpProblem& problem);

}  // namespace activetime
