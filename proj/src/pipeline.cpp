#include "activetime/pipeline.hpp"

#include "activetime/error.hpp"

namespace activetime {

PipelineResult run_pipeline(const Instance& instance) {
  LaminarTree tree = LaminarTree::build(instance);
  NodeLp lp = build_node_lp(tree, instance);
  LpSolution lp_solution = solve(lp.problem);
  if (lp_solution.status != LpStatus::Optimal) {
    throw Error(ErrorCode::Infeasible, "node LP has no optimal solution");
  }
  TransformedSolution transformed = push_down(lp, tree, lp.extract(lp_solution));
  IntegralOpening opening = round_opening(transformed, tree);
  Rational ratio = certify_ratio(opening);
  OpeningVerdict verdict = check_opening(opening.x_tilde, tree, instance);
  return PipelineResult{std::move(tree),        std::move(lp),      std::move(lp_solution),
                        std::move(transformed), std::move(opening), std::move(ratio),
                        std::move(verdict)};
}

}  // namespace activetime
