#pragma once

#include "bomc/rational.hpp"

#include <cstddef>
#include <vector>

namespace bomc {

/// maximize  objective . u
/// s.t.      sum_j columns[j] * u_j <= rhs,   u >= 0,
/// with rhs >= 0 so the origin is feasible and no phase one is needed.
struct PackingLp {
  std::vector<Rat> rhs;
  std::vector<std::vector<Rat>> columns;  // each of size rhs.size()
  std::vector<Rat> objective;             // one entry per column

  std::size_t add_column(std::vector<Rat> coefficients, Rat cost);
};

enum class LpStatus { optimal, unbounded };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rat value;
  std::vector<Rat> primal;      // per column
  std::vector<Rat> row_prices;  // optimal dual, one per row, >= 0
  std::size_t pivots = 0;
};

/// Exact primal simplex on a dense rational tableau, starting from the slack
/// basis. Bland's rule for both entering and leaving choices, so it cannot
/// cycle. The returned primal is a basic solution: at most rhs.size()
/// columns are nonzero.
LpResult solve_packing_lp(const PackingLp& lp);

}  // namespace bomc
