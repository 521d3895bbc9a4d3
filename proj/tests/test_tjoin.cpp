#include "bomc/cuts.hpp"
#include "bomc/errors.hpp"
#include "bomc/instance_io.hpp"
#include "bomc/tjoin.hpp"

#include "corpus.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cstdint>

namespace bomc {
namespace {

TEST(TJoin, FixtureValues) {
  const Instance path = builtin_fixture("FIX-TRI-PATH");
  EXPECT_EQ(min_tjoin(path, {0, 2}).length, 1);
  EXPECT_EQ(min_tjoin(path, {0, 2}).join, (EdgeSet{2}));
  EXPECT_EQ(min_tjoin(path, {}).length, 0);
  EXPECT_TRUE(min_tjoin(path, {}).join.empty());
  const Instance c4 = builtin_fixture("FIX-C4");
  EXPECT_EQ(min_tjoin(c4, {0, 1, 2, 3}).length, 2);
}

TEST(TJoin, RejectsOddTargets) {
  const Instance path = builtin_fixture("FIX-TRI-PATH");
  EXPECT_THROW(min_tjoin(path, {0}), InvalidInput);
}

TEST(TJoin, MatchesExhaustiveJoinsOnEveryEvenTarget) {
  for (const auto& entry : testing::corpus(50)) {
    const Instance& inst = entry.inst;
    const int n = inst.graph().vertex_count();
    if (inst.graph().edge_count() > 12) continue;
    const Metric metric = shortest_path_metric(inst);
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); s += 3) {
      if (std::popcount(s) % 2 != 0) continue;
      const VertexSet t = from_mask(s, n);
      const JoinResult got = min_tjoin(inst, metric, t);
      EXPECT_EQ(got.length, *oracle::tjoin_length(inst, t)) << entry.name;
      EXPECT_EQ(inst.lengths().sum(got.join), got.length);
      EXPECT_EQ(odd_degree_vertices(inst.graph(), got.join), t) << entry.name;
    }
  }
}

TEST(TJoin, MatchingCap) {
  const Instance c4 = builtin_fixture("FIX-C4");
  Caps caps;
  caps.matching = 2;
  EXPECT_THROW(min_tjoin(c4, {0, 1, 2, 3}, caps), CapacityError);
}

TEST(TJoin, MetricPathsRealizeDistances) {
  for (const auto& entry : testing::corpus(20)) {
    const Instance& inst = entry.inst;
    const Metric metric = shortest_path_metric(inst);
    const int n = inst.graph().vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        const auto p = metric.path(u, v);
        Rat len = 0;
        for (EdgeId e : p) len += inst.lengths()[e];
        EXPECT_EQ(len, metric.distance(u, v));
        if (u != v) EXPECT_EQ(odd_degree_vertices(inst.graph(), normalize(p)).size(), 2U);
      }
    }
  }
}

TEST(TJoin, QplusMembership) {
  const Instance c4 = builtin_fixture("FIX-C4");
  const EdgeVector half(4, Rat(1, 2));
  // Every {0,2}-cut of C4 crosses two edges.
  EXPECT_TRUE(qplus_contains(c4.graph(), {0, 2}, half).contained);
  const EdgeVector low(std::vector<Rat>{Rat(1, 4), Rat(1, 2), Rat(1, 2), Rat(1, 2)});
  const QplusVerdict v = qplus_contains(c4.graph(), {0, 1}, low);
  EXPECT_FALSE(v.contained);
  ASSERT_TRUE(v.violated.has_value());
  EXPECT_LT(low.sum(v.violated->edges), 1);
  EXPECT_TRUE(qplus_contains(c4.graph(), {}, EdgeVector(4)).contained);
}

}  // namespace
}  // namespace bomc
