#pragma once

#include "bomc/caps.hpp"
#include "bomc/decomposition.hpp"
#include "bomc/graph.hpp"

#include <vector>

namespace bomc {

/// p*(e): weight of trees F with e in F(T); q*(e): weight with e in F \ F(T).
struct ParityVectors {
  EdgeVector p_star;
  EdgeVector q_star;
};

ParityVectors parity_vectors(const Graph& g, const TreeCombination& combo, const VertexSet& t);

/// A cut Q with x*(Q) < 2 and its repair vector x^Q, where x^Q(e) is the
/// weight of trees F with Q cap F = {e}.
struct NarrowCut {
  Cut cut;
  Rat x_star_value;
  EdgeVector xq;
  Rat one_tree_prob;  // weight of trees crossing Q exactly once = x^Q(Q)
};

/// Narrow cuts found among the fundamental cuts of the combination's trees,
/// sorted by canonical side (lexicographic).
std::vector<NarrowCut> narrow_cuts(const Instance& inst, const EdgeVector& x_star,
                                   const TreeCombination& combo);

/// Same set obtained by enumerating every cut of G (oracle; n <= cap).
std::vector<NarrowCut> narrow_cuts_exhaustive(const Instance& inst, const EdgeVector& x_star,
                                              const TreeCombination& combo,
                                              const Caps& caps = {});

/// Repair vector of an arbitrary cut against the combination.
NarrowCut evaluate_cut(const Cut& cut, const EdgeVector& x_star, const TreeCombination& combo);

/// Throws InvalidInput unless 1/3 < beta < 1/2.
void require_beta(const Rat& beta);

/// max{0, (4 beta - 1 - beta x*(Q)) / (2 - x*(Q))}; requires x*(Q) < 2.
Rat f_q(const Rat& beta, const Rat& x_star_value);

/// s^F(beta): sum of f^Q(beta) x^Q over narrow cuts crossed at least twice
/// by the tree f.
EdgeVector s_vector(const Graph& g, const EdgeSet& f, const Rat& beta,
                    const std::vector<NarrowCut>& narrow);

/// max{0, 1 - (beta x*(C) + (1 - 2 beta)|C cap f|)}, except 0 when C is
/// narrow and crossed exactly once by f.
Rat deficit(const EdgeSet& f, const Cut& c, const Rat& beta, const EdgeVector& x_star);

}  // namespace bomc
