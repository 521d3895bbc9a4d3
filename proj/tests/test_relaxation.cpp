#include "bomc/errors.hpp"
#include "bomc/instance_io.hpp"
#include "bomc/relaxation.hpp"

#include "corpus.hpp"
#include "fixture_files.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace bomc {
namespace {

TEST(Relaxation, FrozenOptimaOfFixtureFiles) {
  for (const auto& frozen : testing::kFrozen) {
    const Instance inst = testing::load_fixture(frozen.file);
    const LpSolution lp = solve_relaxation(inst);
    EXPECT_EQ(lp.value, frozen.lp) << frozen.file;
    EXPECT_EQ(lp.x_star.dot(inst.lengths()), lp.value) << frozen.file;
    EXPECT_TRUE(oracle::in_relaxation(inst, lp.x_star)) << frozen.file;
  }
}

TEST(Relaxation, NamedFixtureOptima) {
  EXPECT_EQ(solve_relaxation(builtin_fixture("FIX-EDGE")).value, 1);
  EXPECT_EQ(solve_relaxation(builtin_fixture("FIX-TRI-PATH")).value, 2);
  EXPECT_EQ(solve_relaxation(builtin_fixture("FIX-TRI-TOUR")).value, 3);
  const LpSolution c4 = solve_relaxation(builtin_fixture("FIX-C4"));
  EXPECT_EQ(c4.value, 4);
  EXPECT_EQ(c4.x_star, EdgeVector(4, Rat(1)));
}

TEST(Relaxation, ActiveConstraintsAreTight) {
  for (const auto& entry : testing::corpus(30)) {
    const LpSolution lp = solve_relaxation(entry.inst);
    for (const LpConstraint& c : lp.active_constraints) {
      EXPECT_EQ(lp.x_star.sum(c.edges), c.rhs) << entry.name << " " << describe(c);
    }
  }
}

TEST(Relaxation, OptimumBeatsEveryEnumeratedVertexCandidate) {
  // Any T-tour chi is a point of P(G,T); the LP optimum cannot exceed its
  // length, and x* must itself be feasible under the naive oracle.
  for (const auto& entry : testing::corpus(40)) {
    const Instance& inst = entry.inst;
    const LpSolution lp = solve_relaxation(inst);
    EXPECT_TRUE(oracle::in_relaxation(inst, lp.x_star)) << entry.name;
    if (inst.graph().edge_count() <= 9) {
      EXPECT_LE(lp.value, oracle::tour_length(inst)) << entry.name;
    }
  }
}

TEST(Relaxation, MembershipAgreesWithOracle) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> quarter(0, 8);
  for (const auto& entry : testing::corpus(30)) {
    const Instance& inst = entry.inst;
    for (int trial = 0; trial < 20; ++trial) {
      EdgeVector x(static_cast<std::size_t>(inst.graph().edge_count()));
      for (EdgeId e = 0; e < inst.graph().edge_count(); ++e) x[e] = Rat(quarter(rng), 4);
      EXPECT_EQ(in_relaxation(inst, x), oracle::in_relaxation(inst, x)) << entry.name;
    }
  }
}

TEST(Relaxation, SeparationFindsViolations) {
  const Instance c4 = builtin_fixture("FIX-C4");
  const EdgeVector half(4, Rat(1, 2));
  const auto cut = separate_even_cut(c4, half);
  ASSERT_TRUE(cut.has_value());
  EXPECT_LT(half.sum(cut->edges), 2);
  const auto part = separate_partition(c4, half);
  ASSERT_TRUE(part.has_value());
  EXPECT_LT(half.sum(partition_cross_edges(c4.graph(), *part)),
            static_cast<int>(part->size()) - 1);
  EXPECT_FALSE(separate_even_cut(c4, EdgeVector(4, Rat(1))).has_value());
  EXPECT_FALSE(separate_partition(c4, EdgeVector(4, Rat(1))).has_value());
}

TEST(Relaxation, Describe) {
  LpConstraint c;
  c.shape = Partition{{0, 1}, {2}, {3}};
  c.rhs = 2;
  EXPECT_EQ(describe(c), "partition 0,1|2|3 >= 2");
  c.shape = Cut{{1, 2}, {}};
  EXPECT_EQ(describe(c), "cut 1 2 >= 2");
}

TEST(Relaxation, Caps) {
  Caps caps;
  caps.partition_enum = 3;
  EXPECT_THROW(solve_relaxation(builtin_fixture("FIX-C4"), caps), CapacityError);
}

}  // namespace
}  // namespace bomc
