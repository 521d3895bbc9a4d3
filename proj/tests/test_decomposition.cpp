#include "bomc/decomposition.hpp"
#include "bomc/errors.hpp"
#include "bomc/instance_io.hpp"
#include "bomc/relaxation.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace bomc {
namespace {

// Fractional tree packing number: min over partitions P of x(delta(P)) / (|P| - 1).
Rat packing_by_partitions(const Graph& g, const EdgeVector& x) {
  std::optional<Rat> best;
  for (const auto& label : oracle::partitions(g.vertex_count())) {
    const int classes = *std::max_element(label.begin(), label.end()) + 1;
    Rat cross = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (label[g.edge(e).u] != label[g.edge(e).v]) cross += x[e];
    }
    const Rat ratio = cross / (classes - 1);
    if (!best || ratio < *best) best = ratio;
  }
  return *best;
}

TEST(Decomposition, PackingValuesOnSmallGraphs) {
  const Instance c4 = builtin_fixture("FIX-C4");
  EXPECT_EQ(packing_value_oracle(c4.graph(), EdgeVector(4, Rat(1))), Rat(4, 3));
  EXPECT_EQ(packing_value_oracle(c4.graph(), EdgeVector(4, Rat(1, 2))), Rat(2, 3));
  const Instance k3 = builtin_fixture("FIX-TRI-TOUR");
  EXPECT_EQ(packing_value_oracle(k3.graph(), EdgeVector(3, Rat(2, 3))), 1);
}

TEST(Decomposition, C4AtOneIsAnExactCombination) {
  const Instance c4 = builtin_fixture("FIX-C4");
  const EdgeVector x(4, Rat(1));
  const TreeCombination combo = decompose(c4.graph(), x);
  EXPECT_TRUE(verify_domination(c4.graph(), combo, x));
  Rat total = 0;
  for (const auto& m : combo.members) total += m.lambda;
  EXPECT_EQ(total, 1);
}

TEST(Decomposition, C4AtOneHalfIsRejected) {
  const Instance c4 = builtin_fixture("FIX-C4");
  const EdgeVector x(4, Rat(1, 2));
  try {
    decompose(c4.graph(), x);
    FAIL() << "expected DecompositionError";
  } catch (const DecompositionError& err) {
    EXPECT_LT(err.packing_value(), 1);
    EXPECT_EQ(x.dot(err.dual()), err.packing_value());
    for (const EdgeSet& t : oracle::spanning_trees(c4.graph())) {
      EXPECT_GE(err.dual().sum(t), 1);
    }
    ASSERT_TRUE(err.violated_partition().has_value());
    const Partition& p = *err.violated_partition();
    EXPECT_LT(x.sum(partition_cross_edges(c4.graph(), p)), static_cast<int>(p.size()) - 1);
  }
}

TEST(Decomposition, RejectsOutOfRangeVectors) {
  const Instance c4 = builtin_fixture("FIX-C4");
  EXPECT_THROW(decompose(c4.graph(), EdgeVector(std::vector<Rat>{3, 1, 1, 1})), InvalidInput);
  EXPECT_THROW(decompose(c4.graph(), EdgeVector(3, Rat(1))), InvalidInput);
  EXPECT_THROW(decompose(c4.graph(), EdgeVector(std::vector<Rat>{-1, 1, 1, 1})), InvalidInput);
}

TEST(Decomposition, AllowsEntriesAboveOne) {
  // x(e) = 2 on a bridge: trees use it with weight one, the slack is unused.
  const Graph g(3, {{0, 1}, {1, 2}, {1, 2}});
  const EdgeVector x(std::vector<Rat>{2, Rat(1, 2), Rat(1, 2)});
  const TreeCombination combo = decompose(g, x);
  EXPECT_TRUE(verify_domination(g, combo, x));
  EXPECT_EQ(combo.expectation(3)[0], 1);
}

TEST(Decomposition, VerdictMatchesPartitionOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> sixth(0, 8);
  int feasible = 0;
  int infeasible = 0;
  for (const auto& entry : testing::corpus(40)) {
    const Graph& g = entry.inst.graph();
    if (g.vertex_count() < 2 || g.vertex_count() > 7) continue;
    for (int trial = 0; trial < 6; ++trial) {
      EdgeVector x(static_cast<std::size_t>(g.edge_count()));
      for (EdgeId e = 0; e < g.edge_count(); ++e) x[e] = Rat(sixth(rng), 6);
      const Rat value = packing_by_partitions(g, x);
      if (g.edge_count() <= 12) EXPECT_EQ(packing_value_oracle(g, x), value) << entry.name;
      if (value >= 1) {
        ++feasible;
        const TreeCombination combo = decompose(g, x);
        EXPECT_TRUE(verify_domination(g, combo, x)) << entry.name;
        EXPECT_LE(combo.members.size(), static_cast<std::size_t>(g.edge_count()));
      } else {
        ++infeasible;
        EXPECT_THROW(decompose(g, x), DecompositionError) << entry.name;
      }
    }
  }
  EXPECT_GT(feasible, 0);
  EXPECT_GT(infeasible, 0);
}

TEST(Decomposition, RelaxationOptimaDecompose) {
  for (const auto& entry : testing::corpus(40)) {
    const LpSolution lp = solve_relaxation(entry.inst);
    const TreeCombination combo = decompose(entry.inst.graph(), lp.x_star);
    EXPECT_TRUE(verify_domination(entry.inst.graph(), combo, lp.x_star)) << entry.name;
  }
}

TEST(Decomposition, DominationVerifierRejectsBadCombinations) {
  const Instance c4 = builtin_fixture("FIX-C4");
  const EdgeVector x(4, Rat(1));
  TreeCombination bad;
  bad.members.push_back({{0, 1, 2}, Rat(1, 2)});
  EXPECT_FALSE(verify_domination(c4.graph(), bad, x));  // weights sum to 1/2
  bad.members.push_back({{0, 1}, Rat(1, 2)});
  EXPECT_FALSE(verify_domination(c4.graph(), bad, x));  // not spanning
  bad.members.back().tree = {0, 1, 2};
  EXPECT_FALSE(verify_domination(c4.graph(), bad, EdgeVector(4, Rat(1, 2))));
  EXPECT_TRUE(verify_domination(c4.graph(), bad, x));
}

TEST(Decomposition, DescribeMember) {
  EXPECT_EQ(describe(TreeMember{{3, 7, 9}, Rat(1, 4)}), "lambda 1/4 : e3 e7 e9");
}

}  // namespace
}  // namespace bomc
