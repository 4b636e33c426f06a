#include <gtest/gtest.h>

#include "activetime/error.hpp"
#include "activetime/feasibility.hpp"
#include "activetime/generators.hpp"
#include "support/brute_force.hpp"

namespace at = activetime;

namespace {

at::RandomLaminarParams tiny() {
  at::RandomLaminarParams p;
  p.max_jobs = 6;
  p.max_horizon = 8;
  return p;
}

std::vector<int> all_slots(const at::Instance& inst) {
  std::vector<int> slots;
  for (int t = 0; t < inst.horizon(); ++t) slots.push_back(t);
  return slots;
}

}  // namespace

TEST(CheckOpening, SingleUnitJob) {
  const at::Instance inst = at::parse_instance("g 1\njob a 0 1 1");
  const at::LaminarTree tree = at::LaminarTree::build(inst);
  const at::OpeningVerdict v = at::check_opening(std::vector<int>{1}, tree, inst);
  ASSERT_TRUE(std::holds_alternative<at::Schedule>(v));
  EXPECT_EQ(std::get<at::Schedule>(v).active_slots, (std::vector<int>{0}));
}

TEST(CheckOpening, GapTwoFeasibleOpening) {
  const at::Instance inst = at::gap_instance(2);
  const at::LaminarTree tree = at::LaminarTree::build(inst);
  const at::OpeningVerdict v = at::check_opening(std::vector<int>{0, 2, 1}, tree, inst);
  ASSERT_TRUE(std::holds_alternative<at::Schedule>(v));
  const at::Schedule& s = std::get<at::Schedule>(v);
  EXPECT_EQ(s.active_slots, (std::vector<int>{0, 1, 2}));
  EXPECT_EQ(at::schedule_error(s, inst), std::nullopt);
  EXPECT_TRUE(at::check_slots(s.active_slots, inst));
}

TEST(CheckOpening, GapTwoCertificate) {
  const at::Instance inst = at::gap_instance(2);
  const at::LaminarTree tree = at::LaminarTree::build(inst);
  const std::vector<int> opening{0, 1, 1};
  const at::OpeningVerdict v = at::check_opening(opening, tree, inst);
  ASSERT_TRUE(std::holds_alternative<at::CutCertificate>(v));
  const at::CutCertificate& c = std::get<at::CutCertificate>(v);
  EXPECT_EQ(c.jobs, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(c.lhs, 4);
  EXPECT_EQ(c.rhs, 6);
  EXPECT_EQ(c.per_node_cap, (std::vector<int>{1, 2, 2}));
  EXPECT_EQ(at::cut_capacity(c.jobs, opening, tree, inst), c.lhs);
  EXPECT_TRUE(at::find_violating_subset(opening, tree, inst, 10).has_value());
  EXPECT_TRUE(at::verify_cut_condition(opening, tree, inst, 10));
}

TEST(CheckSlots, GapTwo) {
  const at::Instance inst = at::gap_instance(2);
  EXPECT_TRUE(at::check_slots(std::vector<int>{0, 1, 2, 3}, inst));
  EXPECT_TRUE(at::check_slots(std::vector<int>{0, 1, 2}, inst));
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) EXPECT_FALSE(at::check_slots(std::vector<int>{a, b}, inst));
  }
}

TEST(CheckSlots, HorizonLimit) {
  const at::Instance inst = at::parse_instance("g 1\njob a 0 70 1");
  try {
    at::check_slots(std::vector<int>{0}, inst);
    FAIL();
  } catch (const at::Error& e) {
    EXPECT_EQ(e.code(), at::ErrorCode::HorizonTooLarge);
  }
}

TEST(CheckSlots, AgreesWithBruteForce) {
  for (std::uint32_t seed = 1; seed <= 150; ++seed) {
    const at::Instance inst = at::random_laminar(seed, tiny());
    const int horizon = inst.horizon();
    for (std::uint32_t mask = 0; mask < (1u << horizon); ++mask) {
      std::vector<int> open;
      for (int t = 0; t < horizon; ++t) {
        if (mask >> t & 1) open.push_back(t);
      }
      ASSERT_EQ(at::check_slots(open, inst), at::testing::brute_force_slots_feasible(inst, open))
          << "seed " << seed << " mask " << mask;
    }
  }
}

TEST(CutCondition, EmptySubsetHoldsVacuously) {
  const at::Instance inst = at::gap_instance(2);
  const at::LaminarTree tree = at::LaminarTree::build(inst);
  EXPECT_EQ(at::cut_capacity(std::vector<int>{}, std::vector<int>{0, 0, 0}, tree, inst), 0);
}

TEST(CutCondition, SubsetLimit) {
  const at::Instance inst = at::gap_instance(4);
  const at::LaminarTree tree = at::LaminarTree::build(inst);
  const std::vector<int> opening(tree.size(), 0);
  try {
    at::find_violating_subset(opening, tree, inst, 10);
    FAIL();
  } catch (const at::Error& e) {
    EXPECT_EQ(e.code(), at::ErrorCode::SubsetLimitExceeded);
  }
}

// Flow verdict, subset verdict, extracted schedules, and monotonicity over
// every opening of small random instances.
TEST(CheckOpening, PropertiesOverAllOpenings) {
  for (std::uint32_t seed = 1; seed <= 80; ++seed) {
    const at::Instance inst = at::random_laminar(seed, tiny());
    const at::LaminarTree tree = at::LaminarTree::build(inst);
    at::testing::for_each_opening(tree, [&](const std::vector<int>& x) {
      const at::OpeningVerdict v = at::check_opening(x, tree, inst);
      const bool feasible = std::holds_alternative<at::Schedule>(v);
      const bool no_violation = !at::find_violating_subset(x, tree, inst, 10).has_value();
      ASSERT_EQ(feasible, no_violation) << "seed " << seed;
      ASSERT_TRUE(at::verify_cut_condition(x, tree, inst, 10));
      if (feasible) {
        const at::Schedule& s = std::get<at::Schedule>(v);
        ASSERT_EQ(at::schedule_error(s, inst), std::nullopt) << "seed " << seed;
        ASSERT_TRUE(at::check_slots(s.active_slots, inst));
        for (int i = 0; i < tree.size(); ++i) {
          if (x[i] == tree.private_capacity(i)) continue;
          std::vector<int> more = x;
          ++more[i];
          ASSERT_TRUE(std::holds_alternative<at::Schedule>(at::check_opening(more, tree, inst)));
        }
      } else {
        const at::CutCertificate& c = std::get<at::CutCertificate>(v);
        ASSERT_LT(c.lhs, c.rhs);
        ASSERT_EQ(at::cut_capacity(c.jobs, x, tree, inst), c.lhs);
      }
    });
  }
}

TEST(ScheduleValidator, CatchesEachDefect) {
  const at::Instance inst = at::parse_instance("g 1\njob a 0 2 2\njob b 2 3 1");
  at::Schedule good{{{0, 1}, {2}}, {0, 1, 2}};
  EXPECT_EQ(at::schedule_error(good, inst), std::nullopt);

  at::Schedule short_job{{{0}, {2}}, {0, 2}};
  EXPECT_TRUE(at::schedule_error(short_job, inst).has_value());
  at::Schedule repeated{{{0, 0}, {2}}, {0, 2}};
  EXPECT_TRUE(at::schedule_error(repeated, inst).has_value());
  at::Schedule outside{{{0, 1}, {1}}, {0, 1}};
  EXPECT_TRUE(at::schedule_error(outside, inst).has_value());

  const at::Instance crowded = at::parse_instance("g 1\njob a 0 2 1\njob b 0 2 1");
  at::Schedule overfull{{{0}, {0}}, {0}};
  EXPECT_TRUE(at::schedule_error(overfull, crowded).has_value());
}

TEST(ScheduleSerialization, OneLinePerActiveSlot) {
  const at::Instance inst = at::parse_instance("g 2\njob a 0 2 2\njob b 1 2 1");
  const at::Schedule s{{{0, 1}, {1}}, {0, 1}};
  EXPECT_EQ(at::serialize(s, inst), "slot 0: a\nslot 1: a b\n");
}

TEST(CheckSlots, AllSlotsFeasibleForGenerated) {
  for (std::uint32_t seed = 1; seed <= 100; ++seed) {
    const at::Instance inst = at::random_laminar(seed);
    EXPECT_TRUE(at::check_slots(all_slots(inst), inst));
  }
}
