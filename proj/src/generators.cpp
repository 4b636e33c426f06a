#include "activetime/generators.hpp"

#include <algorithm>
#include <random>

#include "activetime/error.hpp"
#include "activetime/feasibility.hpp"

namespace activetime {

Instance gap_instance(int g) {
  if (g < 2) throw Error(ErrorCode::PreconditionViolated, "gap instance needs g >= 2");
  Instance instance;
  instance.g = g;
  instance.jobs.push_back(Job{"j0", 0, 2 * g, g});
  for (int i = 0; i < g; ++i) {
    for (int k = 0; k < g; ++k) {
      instance.jobs.push_back(Job{"u" + std::to_string(i) + "_" + std::to_string(k), 2 * i, 2 * i + 2, 1});
    }
  }
  return instance;
}

SlotAssignment gap_fractional_witness(int g) {
  const Instance instance = gap_instance(g);
  const int horizon = 2 * g;
  const Rational half(1, 2);
  SlotAssignment w;
  w.x.assign(horizon, make_rational(g + 2, 2 * g));
  w.y.assign(horizon, std::vector<Rational>(instance.jobs.size()));
  for (int t = 0; t < horizon; ++t) {
    for (std::size_t j = 0; j < instance.jobs.size(); ++j) {
      if (instance.jobs[j].window().contains(t)) w.y[t][j] = half;
    }
  }
  return w;
}

FractionalSolution project_to_nodes(const SlotAssignment& assignment, const LaminarTree& tree) {
  FractionalSolution s;
  const std::size_t jobs = assignment.y.empty() ? 0 : assignment.y[0].size();
  s.x.assign(tree.size(), Rational(0));
  s.y.assign(tree.size(), std::vector<Rational>(jobs));
  for (int i = 0; i < tree.size(); ++i) {
    for (int t : tree.node(i).private_pool) {
      s.x[i] += assignment.x[t];
      for (std::size_t j = 0; j < jobs; ++j) s.y[i][j] += assignment.y[t][j];
    }
  }
  return s;
}

namespace {

class Draws {
 public:
  explicit Draws(std::uint32_t seed) : engine_(seed) {}
  // Uniform-ish in [0, n) by modulo; n >= 1.
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint32_t>(n)); }

 private:
  std::minstd_rand engine_;
};

// Appends span, then recurses into up to three disjoint sub-windows.
void split(Draws& draws, const Interval& span, int depth, int max_depth, std::vector<Interval>& out) {
  out.push_back(span);
  if (depth >= max_depth || span.length() < 2) return;
  std::vector<int> points{span.begin, span.end};
  const int cuts = 1 + draws.below(std::min(3, span.length() - 1));
  for (int c = 0; c < cuts; ++c) points.push_back(span.begin + 1 + draws.below(span.length() - 1));
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (std::size_t k = 0; k + 1 < points.size(); ++k) {
    if (draws.below(4) == 0) continue;
    Interval piece{points[k], points[k + 1]};
    // Occasionally shrink so the parent keeps private slots inside the piece.
    if (piece.length() >= 2 && draws.below(3) == 0) {
      piece.begin += draws.below(2);
      piece.end -= piece.length() >= 2 ? draws.below(2) : 0;
    }
    split(draws, piece, depth + 1, max_depth, out);
  }
}

}  // namespace

Instance random_laminar(std::uint32_t seed, const RandomLaminarParams& params) {
  if (params.max_depth < 1 || params.max_jobs < 1 || params.max_g < 1 || params.max_horizon < 1) {
    throw Error(ErrorCode::PreconditionViolated, "random_laminar bounds must be positive");
  }
  Draws draws(seed);
  for (int attempt = 0; attempt < params.max_attempts; ++attempt) {
    const int horizon = 1 + params.max_horizon / 2 + draws.below(params.max_horizon - params.max_horizon / 2);
    std::vector<Interval> windows;
    split(draws, {0, horizon}, 0, params.max_depth, windows);

    Instance instance;
    instance.g = 1 + draws.below(params.max_g);
    const int count = 1 + params.max_jobs / 2 + draws.below(params.max_jobs - params.max_jobs / 2);
    for (int k = 0; k < count; ++k) {
      const int size = static_cast<int>(windows.size());
      const Interval w = windows[draws.below(size)];
      // Mostly short jobs, so that capacity g rather than length drives the LP.
      const int longest = draws.below(3) == 0 ? w.length() : std::min(w.length(), 2);
      instance.jobs.push_back(Job{"j" + std::to_string(k), w.begin, w.end, 1 + draws.below(longest)});
    }
    std::vector<int> all;
    for (int t = 0; t < instance.horizon(); ++t) all.push_back(t);
    if (check_slots(all, instance)) return instance;
  }
  throw Error(ErrorCode::GenerationFailed,
              "no feasible draw within " + std::to_string(params.max_attempts) + " attempts");
}

}  // namespace activetime
