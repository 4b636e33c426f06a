#pragma once

#include <vector>

#include "activetime/instance.hpp"
#include "activetime/rational.hpp"
#include "activetime/transform.hpp"

namespace activetime {

struct IntegralOpening {
  std::vector<int> x_tilde;  // slots opened per node
  long long total_open = 0;
  Rational lp_total;
};

/// Rounds a pushed-down solution. Nodes of I start at floor(x), every
/// other node keeps its (integral) x. Then, for each node of Anc(I) by
/// decreasing depth (ties: pre-order), while 9/5 x(Des(i)) >= x~(Des(i)) + 1
/// the lowest-index still-fractional node below i is rounded up.
///
/// Throws PreconditionViolated if a node outside I is fractional.
IntegralOpening round_opening(const TransformedSolution& ts, const LaminarTree& tree);

/// total_open / lp_total; throws RatioExceeded above 9/5.
Rational certify_ratio(const IntegralOpening& opening);

}  // namespace activetime
