#pragma once

#include "bomc/caps.hpp"
#include "bomc/graph.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace bomc {

/// One generated inequality x(edges) >= rhs: an even cut (rhs 2) or a
/// partition (rhs |classes| - 1).
struct LpConstraint {
  std::variant<Cut, Partition> shape;
  EdgeSet edges;
  Rat rhs;
};

/// "cut 1 2 >= 2" or "partition 0,1|2|3 >= 2".
std::string describe(const LpConstraint& c);

struct LpSolution {
  EdgeVector x_star;
  Rat value;
  /// Generated constraints that are tight at x_star.
  std::vector<LpConstraint> active_constraints;
  std::size_t rounds = 0;
  std::size_t generated = 0;
};

/// Most violated W (|W cap T| even) with x(delta(W)) < 2, ties to the
/// lexicographically smallest canonical side.
std::optional<Cut> separate_even_cut(const Instance& inst, const EdgeVector& x,
                                     const Caps& caps = {});

/// Most violated partition with x(delta(P)) < |P| - 1 (first in
/// restricted-growth order among ties).
std::optional<Partition> separate_partition(const Instance& inst, const EdgeVector& x,
                                            const Caps& caps = {});

/// True iff x lies in P(G,T): bounds, every even cut, every partition.
bool in_relaxation(const Instance& inst, const EdgeVector& x, const Caps& caps = {});

/// Exact minimizer of c.x over P(G,T) by cutting planes.
LpSolution solve_relaxation(const Instance& inst, const Caps& caps = {});

}  // namespace bomc
