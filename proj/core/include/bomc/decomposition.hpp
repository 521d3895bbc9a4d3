#pragma once

#include "bomc/caps.hpp"
#include "bomc/errors.hpp"
#include "bomc/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bomc {

struct TreeMember {
  EdgeSet tree;
  Rat lambda;
};

/// Spanning trees with positive weights summing to one.
struct TreeCombination {
  std::vector<TreeMember> members;

  /// sum_F lambda_F chi_F.
  EdgeVector expectation(std::size_t edge_count) const;
};

/// "lambda p/q : e3 e7 e9"
std::string describe(const TreeMember& member);

/// Raised when x does not dominate a convex combination of spanning trees,
/// i.e. the fractional tree-packing value is below one.
class DecompositionError : public InvalidInput {
 public:
  DecompositionError(Rat packing_value, EdgeVector dual,
                     std::optional<Partition> violated);

  const Rat& packing_value() const noexcept { return packing_value_; }
  /// Optimal edge prices of the packing LP: every spanning tree has price
  /// at least one while x . dual = packing_value < 1.
  const EdgeVector& dual() const noexcept { return dual_; }
  const std::optional<Partition>& violated_partition() const noexcept { return violated_; }

 private:
  Rat packing_value_;
  EdgeVector dual_;
  std::optional<Partition> violated_;
};

/// Column generation for max sum(lambda) s.t. sum lambda_F chi_F <= x over
/// spanning trees of supp(x), pricing by minimum spanning tree under the
/// dual prices. The basic optimum is scaled to sum one.
TreeCombination decompose(const Graph& g, const EdgeVector& x, const Caps& caps = {});

/// Same packing LP over every spanning tree of g (exhaustive; test oracle).
Rat packing_value_oracle(const Graph& g, const EdgeVector& x, const Caps& caps = {});

/// lambda > 0, sum lambda = 1, every member spanning, sum lambda chi <= x,
/// at most m members.
bool verify_domination(const Graph& g, const TreeCombination& combo, const EdgeVector& x);

}  // namespace bomc
