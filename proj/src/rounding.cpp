#include "activetime/rounding.hpp"

#include <algorithm>

#include "activetime/error.hpp"

namespace activetime {

IntegralOpening round_opening(const TransformedSolution& ts, const LaminarTree& tree) {
  const FractionalSolution& s = ts.solution;
  const int m = tree.size();
  std::vector<bool> in_topmost(m, false);
  for (int i : ts.topmost) in_topmost[i] = true;

  IntegralOpening out;
  out.x_tilde.resize(m);
  out.lp_total = s.total();
  for (int i = 0; i < m; ++i) {
    if (!in_topmost[i] && !is_integer(s.x[i])) {
      throw Error(ErrorCode::PreconditionViolated,
                  "node " + std::to_string(i) + " is outside I but has fractional x = " + to_string(s.x[i]));
    }
    out.x_tilde[i] = static_cast<int>(floor_to_int(s.x[i]));
  }

  std::vector<int> order;
  for (int i = 0; i < m; ++i) {
    bool above_topmost = false;
    for (int t : ts.topmost) above_topmost = above_topmost || tree.is_ancestor(i, t);
    if (above_topmost) order.push_back(i);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return tree.node(a).depth > tree.node(b).depth; });

  const Rational ratio(9, 5);
  for (int i : order) {
    const int end = i + tree.node(i).subtree_size;
    Rational fractional = 0;
    long rounded = 0;
    for (int d = i; d < end; ++d) {
      fractional += s.x[d];
      rounded += out.x_tilde[d];
    }
    while (ratio * fractional >= rounded + 1) {
      int candidate = -1;
      for (int d = i; d < end && candidate < 0; ++d) {
        if (out.x_tilde[d] < s.x[d]) candidate = d;
      }
      if (candidate < 0) break;
      const int up = static_cast<int>(ceil_to_int(s.x[candidate]));
      rounded += up - out.x_tilde[candidate];
      out.x_tilde[candidate] = up;
    }
  }
  for (int v : out.x_tilde) out.total_open += v;
  return out;
}

Rational certify_ratio(const IntegralOpening& opening) {
  const Rational total(static_cast<long>(opening.total_open));
  if (opening.lp_total == 0) {
    if (total == 0) return Rational(0);
    throw Error(ErrorCode::RatioExceeded, "slots opened against a zero LP value");
  }
  Rational ratio = total / opening.lp_total;
  if (ratio > Rational(9, 5)) {
    throw Error(ErrorCode::RatioExceeded, "opened " + std::to_string(opening.total_open) +
                                              " slots against LP value " + to_string(opening.lp_total));
  }
  return ratio;
}

}  // namespace activetime
