#pragma once

#include "bomc/graph.hpp"

#include <cstdint>

namespace bomc {

struct GenParams {
  int n = 4;
  int m = 5;
  std::uint64_t seed = 0;
  int weight_lo = 1;  // weights are p/d with d in {1,2,3,4}, lo <= p/d <= hi
  int weight_hi = 9;
  int t_size = 2;
};

/// Random spanning tree plus m - n + 1 extra edges (distinct pairs while any
/// remain, parallel edges after that). Identical params give an identical
/// instance on every platform. Throws InvalidInput for infeasible params.
Instance gen_random(const GenParams& params);

}  // namespace bomc
