#include <gtest/gtest.h>

#include <numeric>

#include "activetime/error.hpp"
#include "activetime/feasibility.hpp"
#include "activetime/generators.hpp"
#include "activetime/oracle.hpp"
#include "support/brute_force.hpp"

namespace at = activetime;
using at::Rational;

TEST(Oracle, OneUnitJob) {
  const at::OracleResult r = at::optimal_active_time(at::parse_instance("g 1\njob a 2 5 1"));
  EXPECT_EQ(r.opt, 1);
  EXPECT_EQ(r.witness, (std::vector<int>{2}));
}

TEST(Oracle, GapInstances) {
  const at::OracleResult two = at::optimal_active_time(at::gap_instance(2));
  EXPECT_EQ(two.opt, 3);
  EXPECT_EQ(two.witness, (std::vector<int>{0, 1, 2}));
  EXPECT_TRUE(at::is_minimal_feasible(two.witness, at::gap_instance(2)));
  EXPECT_EQ(at::optimal_active_time(at::gap_instance(4)).opt, 6);
  EXPECT_EQ(at::optimal_active_time(at::gap_instance(6)).opt, 9);
}

TEST(Oracle, Errors) {
  auto code_of = [](const at::Instance& inst, at::OracleLimits limits) {
    try {
      at::optimal_active_time(inst, limits);
    } catch (const at::Error& e) {
      return e.code();
    }
    return at::ErrorCode::MalformedLine;
  };
  EXPECT_EQ(code_of(at::parse_instance("g 1\njob a 0 1 1\njob b 0 1 1"), {}), at::ErrorCode::Infeasible);
  EXPECT_EQ(code_of(at::gap_instance(4), {.slot_budget = 5}), at::ErrorCode::BudgetExceeded);
  EXPECT_EQ(code_of(at::parse_instance("g 1\njob a 0 30 1"), {}), at::ErrorCode::HorizonTooLarge);
}

TEST(Oracle, MinimalityOfWitnesses) {
  const at::Instance slack = at::parse_instance("g 2\njob a 0 4 1");
  EXPECT_FALSE(at::is_minimal_feasible(std::vector<int>{0, 1, 2, 3}, slack));
  EXPECT_TRUE(at::is_minimal_feasible(std::vector<int>{3}, slack));
}

// The oracle against plain enumeration with the test-side backtracking check.
TEST(Oracle, MatchesBruteForceEnumeration) {
  at::RandomLaminarParams params;
  params.max_jobs = 5;
  params.max_horizon = 8;
  for (std::uint32_t seed = 1; seed <= 120; ++seed) {
    const at::Instance inst = at::random_laminar(seed, params);
    const int horizon = inst.horizon();
    int best = horizon + 1;
    for (std::uint32_t mask = 0; mask < (1u << horizon); ++mask) {
      const int count = __builtin_popcount(mask);
      if (count >= best) continue;
      std::vector<int> open;
      for (int t = 0; t < horizon; ++t) {
        if (mask >> t & 1) open.push_back(t);
      }
      if (at::testing::brute_force_slots_feasible(inst, open)) {
        best = count;
      }
    }
    const at::OracleResult r = at::optimal_active_time(inst);
    EXPECT_EQ(r.opt, best) << "seed " << seed;
    EXPECT_EQ(static_cast<int>(r.witness.size()), r.opt);
    EXPECT_TRUE(at::testing::brute_force_slots_feasible(inst, r.witness));
    EXPECT_TRUE(at::is_minimal_feasible(r.witness, inst));
  }
}

TEST(Oracle, WitnessIsLexicographicallyFirst) {
  for (std::uint32_t seed = 1; seed <= 60; ++seed) {
    const at::Instance inst = at::random_laminar(seed);
    const at::OracleResult r = at::optimal_active_time(inst);
    // No k-subset that sorts before the witness may be feasible.
    std::vector<int> pick(r.opt);
    std::iota(pick.begin(), pick.end(), 0);
    const int horizon = inst.horizon();
    while (pick != r.witness) {
      ASSERT_FALSE(at::check_slots(pick, inst)) << "seed " << seed;
      int a = r.opt - 1;
      while (a >= 0 && pick[a] == horizon - r.opt + a) --a;
      ASSERT_GE(a, 0);
      ++pick[a];
      for (int b = a + 1; b < r.opt; ++b) pick[b] = pick[b - 1] + 1;
    }
  }
}

TEST(GapInstance, Shape) {
  const at::Instance inst = at::gap_instance(2);
  EXPECT_EQ(inst.g, 2);
  EXPECT_EQ(inst.jobs.size(), 5u);
  EXPECT_EQ(inst.horizon(), 4);
  EXPECT_EQ(inst.jobs[0], (at::Job{"j0", 0, 4, 2}));
  const at::LaminarTree tree = at::LaminarTree::build(at::gap_instance(5));
  EXPECT_EQ(tree.node(0).interval, (at::Interval{0, 10}));
  EXPECT_EQ(tree.node(0).children.size(), 5u);
  EXPECT_THROW(at::gap_instance(1), at::Error);
}

TEST(GapWitness, ObjectiveAndEntries) {
  const at::SlotAssignment w = at::gap_fractional_witness(6);
  Rational total = 0;
  for (const Rational& x : w.x) {
    EXPECT_EQ(x, Rational(2, 3));
    total += x;
  }
  EXPECT_EQ(total, 8);
  EXPECT_EQ(w.y[3][0], Rational(1, 2));
  EXPECT_EQ(w.y[3][1], 0);  // u0_0 lives in [0,2)
}

TEST(RandomLaminar, DeterministicPerSeed) {
  for (std::uint32_t seed : {0u, 1u, 7u, 12345u}) {
    EXPECT_EQ(at::random_laminar(seed), at::random_laminar(seed));
  }
  EXPECT_NE(at::random_laminar(1), at::random_laminar(2));
}

TEST(RandomLaminar, RespectsBoundsAndIsFeasible) {
  const at::RandomLaminarParams params;
  for (std::uint32_t seed = 1; seed <= 300; ++seed) {
    const at::Instance inst = at::random_laminar(seed, params);
    EXPECT_LE(static_cast<int>(inst.jobs.size()), params.max_jobs);
    EXPECT_LE(inst.horizon(), params.max_horizon);
    EXPECT_LE(inst.g, params.max_g);
    EXPECT_NO_THROW(at::validate(inst));
    EXPECT_EQ(at::parse_instance(at::serialize(inst)), inst);
    std::vector<int> all;
    for (int t = 0; t < inst.horizon(); ++t) all.push_back(t);
    EXPECT_TRUE(at::testing::brute_force_slots_feasible(inst, all)) << "seed " << seed;
  }
}

TEST(RandomLaminar, RejectsNonPositiveBounds) {
  at::RandomLaminarParams params;
  params.max_g = 0;
  EXPECT_THROW(at::random_laminar(1, params), at::Error);
}
