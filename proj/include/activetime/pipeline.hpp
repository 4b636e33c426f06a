#pragma once

#include "activetime/feasibility.hpp"
#include "activetime/instance.hpp"
#include "activetime/lp.hpp"
#include "activetime/rounding.hpp"
#include "activetime/transform.hpp"

namespace activetime {

struct PipelineResult {
  LaminarTree tree;
  NodeLp lp;
  LpSolution lp_solution;
  TransformedSolution transformed;
  IntegralOpening opening;
  Rational ratio;  // opened slots / LP value
  OpeningVerdict verdict;

  bool feasible() const { return std::holds_alternative<Schedule>(verdict); }
};

/// Node LP -> push-down -> rounding -> flow check. Throws Error on any
/// broken invariant (ratio, push-down properties); an infeasible rounded
/// opening is reported through `verdict`, not thrown.
PipelineResult run_pipeline(const Instance& instance);

}  // namespace activetime
