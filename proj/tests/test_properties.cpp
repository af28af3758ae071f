#include <gtest/gtest.h>

#include "checks.hpp"

// Reduced-size runs of the randomized checks; the acceptance runner covers
// the full sizes.

namespace {

void expect_ok(const checks::Outcome& o) {
  EXPECT_GT(o.checked, 0u);
  EXPECT_EQ(o.violations, 0u) << o.first_failure;
}

}  // namespace

TEST(Properties, MeasureOracles) { expect_ok(checks::measure_oracles(101, 4, 25)); }
TEST(Properties, GraphOracles) { expect_ok(checks::graph_oracles(102, 4, 30)); }
TEST(Properties, Invariants) { expect_ok(checks::invariants(103, 1000)); }
TEST(Properties, IcMonotonicity) { expect_ok(checks::ic_monotonicity(104, 10)); }
TEST(Properties, SpearmanOracle) { expect_ok(checks::spearman_oracle(105, 200)); }
TEST(Properties, FixtureExpectedValues) { expect_ok(checks::fixture_reproduction()); }
TEST(Properties, SweepStructure) { expect_ok(checks::sweep_structure()); }
TEST(Properties, Determinism) { expect_ok(checks::determinism(2000, 60.0)); }
