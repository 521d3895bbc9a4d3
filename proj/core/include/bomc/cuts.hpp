#pragma once

#include "bomc/caps.hpp"
#include "bomc/graph.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace bomc {

/// Vertex subset as a bitmask; only used below the enumeration caps (n <= 63).
using SideMask = std::uint64_t;

SideMask to_mask(const VertexSet& s);
VertexSet from_mask(SideMask mask, int n);

inline bool odd_intersection(SideMask side, SideMask t) {
  return (std::popcount(side & t) & 1) != 0;
}

/// Lexicographic comparison of the sorted vertex lists of two sides.
bool side_lex_less(SideMask a, SideMask b);

/// w(delta(W)) for every canonical side W (nonempty subset of {1..n-1}).
/// Entry k describes the side with mask k << 1, k = 1 .. 2^(n-1) - 1, so
/// iteration order is increasing mask order.
class CutTable {
 public:
  CutTable(const Graph& g, const EdgeVector& w, std::size_t vertex_cap);

  int vertex_count() const noexcept { return n_; }
  std::size_t size() const noexcept { return values_.size() - 1; }
  /// Side of entry k, 1 <= k <= size().
  static SideMask side(std::size_t k) noexcept { return static_cast<SideMask>(k) << 1; }
  const Rat& value(std::size_t k) const { return values_[k]; }

 private:
  int n_;
  std::vector<Rat> values_;  // values_[0] is the empty side
};

/// Every cut of g, one per edge set, in increasing canonical-side order.
std::vector<Cut> all_cuts(const Graph& g, std::size_t vertex_cap);

/// Cut built from a canonical side mask.
Cut cut_from_mask(const Graph& g, SideMask side);

struct OddCut {
  Cut cut;
  Rat value;
};

/// Minimum of w(delta(W)) over W with |W cap t| odd, by enumerating the
/// 2^(n-1) canonical sides. Ties go to the lexicographically smallest side.
OddCut min_odd_cut(const Graph& g, const VertexSet& t, const EdgeVector& w,
                   const Caps& caps = {});

}  // namespace bomc
