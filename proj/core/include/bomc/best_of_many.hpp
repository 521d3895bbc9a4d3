#pragma once

#include "bomc/caps.hpp"
#include "bomc/decomposition.hpp"
#include "bomc/graph.hpp"
#include "bomc/relaxation.hpp"
#include "bomc/tjoin.hpp"

#include <optional>
#include <vector>

namespace bomc {

/// A spanning tree F plus its shortest parity correction J_F.
struct TourResult {
  EdgeSet tree;
  EdgeSet join;
  EdgeMultiset tour;  // chi_F + chi_J
  Rat length;
  Rat tree_length;
  Rat join_length;  // tau(G, T_F xor T, c)
};

struct BomReport {
  LpSolution lp;
  TreeCombination combo;
  std::vector<TourResult> per_tree;  // parallel to combo.members
  std::size_t best = 0;
  /// best length / c.x*; empty when c.x* = 0.
  std::optional<Rat> ratio_R;

  const TourResult& best_tour() const { return per_tree.at(best); }
};

struct OptResult {
  EdgeMultiset tour;
  Rat length;
};

/// F + (shortest (T_F xor T)-join).
TourResult christofides_single(const Instance& inst, const EdgeSet& f, const Caps& caps = {});
TourResult christofides_single(const Instance& inst, const Metric& metric, const EdgeSet& f,
                               const Caps& caps = {});

/// Christofides-type baseline on a c-minimum spanning tree (ties by edge id).
TourResult min_tree_christofides(const Instance& inst, const Caps& caps = {});

/// LP, tree decomposition, parity correction per tree, best tour (first on
/// ties).
BomReport best_of_many(const Instance& inst, const Caps& caps = {});

/// Shortest T-tour by exhaustive search over {0,1,2}^E (lexicographically
/// first optimum).
OptResult brute_force_opt(const Instance& inst, const Caps& caps = {});

}  // namespace bomc
