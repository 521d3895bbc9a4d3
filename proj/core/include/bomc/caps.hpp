#pragma once

#include <cstddef>

namespace bomc {

/// Size limits for the exhaustive routines. All are configuration values;
/// raising them trades runtime for coverage.
struct Caps {
  std::size_t cut_enum = 20;          // vertices, for 2^(n-1) side enumeration
  std::size_t partition_enum = 12;    // vertices, for Bell(n) partitions
  std::size_t matching = 18;          // |T'| for subset-DP matching
  std::size_t tree_enum = 16;         // edges, for spanning-tree enumeration
  std::size_t bruteforce_edges = 14;  // edges, for the 3^m optimum search
  std::size_t full_cut_oracle = 14;   // vertices, certificate cross-checks
  std::size_t universal_tprime = 10;  // vertices, all-even-T' check
};

}  // namespace bomc
