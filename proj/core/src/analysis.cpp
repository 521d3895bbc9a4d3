#include "bomc/analysis.hpp"

#include "bomc/cuts.hpp"
#include "bomc/errors.hpp"
#include "bomc/trees.hpp"

#include <algorithm>

namespace bomc {

ParityVectors parity_vectors(const Graph& g, const TreeCombination& combo, const VertexSet& t) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  ParityVectors pv{EdgeVector(m), EdgeVector(m)};
  for (const TreeMember& member : combo.members) {
    const EdgeSet join = tree_join(g, member.tree, t);
    for (EdgeId e : member.tree) {
      if (contains(join, e)) {
        pv.p_star[e] += member.lambda;
      } else {
        pv.q_star[e] += member.lambda;
      }
    }
  }
  return pv;
}

NarrowCut evaluate_cut(const Cut& cut, const EdgeVector& x_star, const TreeCombination& combo) {
  NarrowCut nc;
  nc.cut = cut;
  nc.x_star_value = x_star.sum(cut.edges);
  nc.xq = EdgeVector(x_star.size());
  nc.one_tree_prob = 0;
  for (const TreeMember& member : combo.members) {
    const EdgeSet crossing = edge_intersection(cut.edges, member.tree);
    if (crossing.size() == 1) {
      nc.xq[crossing.front()] += member.lambda;
      nc.one_tree_prob += member.lambda;
    }
  }
  return nc;
}

namespace {

// The side of a cut that avoids vertex 0, as all_cuts lists it.
Cut canonical(const Graph& g, Cut cut) {
  if (!contains(cut.side, 0)) return cut;
  const SideMask full = (SideMask{1} << g.vertex_count()) - 1;
  return cut_from_mask(g, full & ~to_mask(cut.side));
}

void sort_by_side(std::vector<NarrowCut>& cuts) {
  std::sort(cuts.begin(), cuts.end(), [](const NarrowCut& a, const NarrowCut& b) {
    return a.cut.side < b.cut.side;
  });
}

}  // namespace

std::vector<NarrowCut> narrow_cuts(const Instance& inst, const EdgeVector& x_star,
                                   const TreeCombination& combo) {
  const Graph& g = inst.graph();
  std::vector<Cut> seen;
  std::vector<NarrowCut> out;
  for (const TreeMember& member : combo.members) {
    for (EdgeId e : member.tree) {
      Cut cut = canonical(g, fundamental_cut(g, member.tree, e));
      if (std::find(seen.begin(), seen.end(), cut) != seen.end()) continue;
      seen.push_back(cut);
      if (x_star.sum(cut.edges) < 2) out.push_back(evaluate_cut(cut, x_star, combo));
    }
  }
  sort_by_side(out);
  return out;
}

std::vector<NarrowCut> narrow_cuts_exhaustive(const Instance& inst, const EdgeVector& x_star,
                                              const TreeCombination& combo, const Caps& caps) {
  std::vector<NarrowCut> out;
  for (const Cut& cut : all_cuts(inst.graph(), caps.cut_enum)) {
    if (x_star.sum(cut.edges) < 2) out.push_back(evaluate_cut(cut, x_star, combo));
  }
  sort_by_side(out);
  return out;
}

void require_beta(const Rat& beta) {
  if (!(beta > Rat(1, 3) && beta < Rat(1, 2))) {
    throw InvalidInput("beta must lie in the open interval (1/3, 1/2), got " + to_string(beta));
  }
}

Rat f_q(const Rat& beta, const Rat& x_star_value) {
  require_beta(beta);
  if (x_star_value >= 2) throw InvalidInput("f_q needs x*(Q) < 2");
  Rat value = (4 * beta - 1 - beta * x_star_value) / (2 - x_star_value);
  return value > 0 ? value : Rat(0);
}

EdgeVector s_vector(const Graph& g, const EdgeSet& f, const Rat& beta,
                    const std::vector<NarrowCut>& narrow) {
  EdgeVector s(static_cast<std::size_t>(g.edge_count()));
  for (const NarrowCut& q : narrow) {
    if (edge_intersection(q.cut.edges, f).size() < 2) continue;
    const Rat coef = f_q(beta, q.x_star_value);
    if (coef != 0) s += q.xq * coef;
  }
  return s;
}

Rat deficit(const EdgeSet& f, const Cut& c, const Rat& beta, const EdgeVector& x_star) {
  require_beta(beta);
  const Rat x_value = x_star.sum(c.edges);
  const auto crossing = static_cast<long>(edge_intersection(c.edges, f).size());
  if (x_value < 2 && crossing == 1) return 0;
  Rat value = 1 - (beta * x_value + (1 - 2 * beta) * crossing);
  return value > 0 ? value : Rat(0);
}

}  // namespace bomc
