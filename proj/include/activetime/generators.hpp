#pragma once

#include <cstdint>

#include "activetime/instance.hpp"
#include "activetime/lp.hpp"

namespace activetime {

/// One long job "j0" (length g, window [0, 2g)) plus, for each i < g, g unit
/// jobs "u<i>_<k>" with window [2i, 2i+2). Requires g >= 2.
Instance gap_instance(int g);

/// Time-indexed fractional solution of the gap instance opening every slot
/// to (g+2)/(2g) and splitting each job half/half over its group's two
/// slots. Job order matches gap_instance(g).
SlotAssignment gap_fractional_witness(int g);

/// Sums a time-indexed assignment over each node's private pool.
FractionalSolution project_to_nodes(const SlotAssignment& assignment, const LaminarTree& tree);

struct RandomLaminarParams {
  int max_depth = 3;
  int max_jobs = 8;
  int max_g = 3;
  int max_horizon = 12;
  int max_attempts = 100;
};

/// Deterministic random laminar instance. Draws come from std::minstd_rand
/// (x <- 48271 x mod 2^31-1) seeded with `seed`, mapped to ranges by plain
/// modulo so the sequence is reproducible anywhere. Infeasible draws are
/// discarded; GenerationFailed after max_attempts.
Instance random_laminar(std::uint32_t seed, const RandomLaminarParams& params = {});

}  // namespace activetime
