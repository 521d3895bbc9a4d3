#include "bomc/decomposition.hpp"

#include "bomc/relaxation.hpp"
#include "bomc/simplex.hpp"
#include "bomc/trees.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bomc {

EdgeVector TreeCombination::expectation(std::size_t edge_count) const {
  EdgeVector out(edge_count);
  for (const TreeMember& m : members) {
    for (EdgeId e : m.tree) out[e] += m.lambda;
  }
  return out;
}

std::string describe(const TreeMember& member) {
  std::ostringstream out;
  out << "lambda " << to_fraction_string(member.lambda) << " :";
  for (EdgeId e : member.tree) out << " e" << e;
  return out.str();
}

DecompositionError::DecompositionError(Rat packing_value, EdgeVector dual,
                                       std::optional<Partition> violated)
    : InvalidInput("input violates tree decomposition premises: packing value " +
                   to_string(packing_value) + " < 1"),
      packing_value_(std::move(packing_value)),
      dual_(std::move(dual)),
      violated_(std::move(violated)) {}

namespace {

std::optional<Partition> try_find_partition(const Graph& g, const EdgeVector& x,
                                            const Caps& caps) {
  try {
    // Terminal set is irrelevant for partition inequalities.
    const Instance probe(g, {}, EdgeVector(x.size()));
    return separate_partition(probe, x, caps);
  } catch (const CapacityError&) {
    return std::nullopt;
  }
}

}  // namespace

TreeCombination decompose(const Graph& g, const EdgeVector& x, const Caps& caps) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (x.size() != m) throw InvalidInput("decompose: vector dimension mismatch");
  for (const Rat& r : x) {
    if (r < 0 || r > 2) throw InvalidInput("decompose: x must satisfy 0 <= x <= 2");
  }
  if (g.vertex_count() == 1) return TreeCombination{{TreeMember{{}, Rat(1)}}};
  const EdgeSet support = x.support();
  std::vector<int> row_of(m, -1);
  for (std::size_t i = 0; i < support.size(); ++i) row_of[support[i]] = static_cast<int>(i);

  PackingLp master;
  for (EdgeId e : support) master.rhs.push_back(x[e]);
  std::vector<EdgeSet> trees;
  auto add_tree = [&](EdgeSet tree) {
    std::vector<Rat> col(support.size(), Rat(0));
    for (EdgeId e : tree) col[row_of[e]] = 1;
    master.add_column(std::move(col), Rat(1));
    trees.push_back(std::move(tree));
  };

  auto first = minimum_spanning_tree(g, EdgeVector(m, Rat(1)), support);
  if (!first) {
    throw DecompositionError(Rat(0), EdgeVector(m), try_find_partition(g, x, caps));
  }
  add_tree(std::move(*first));

  LpResult res;
  EdgeVector prices(m);
  for (;;) {
    res = solve_packing_lp(master);
    if (res.status != LpStatus::optimal) throw std::logic_error("tree packing LP unbounded");
    prices = EdgeVector(m);
    for (std::size_t i = 0; i < support.size(); ++i) prices[support[i]] = res.row_prices[i];
    auto priced = minimum_spanning_tree(g, prices, support);
    if (prices.sum(*priced) >= 1) break;
    if (std::find(trees.begin(), trees.end(), *priced) != trees.end()) {
      throw std::logic_error("column generation priced an existing column");
    }
    add_tree(std::move(*priced));
  }

  if (res.value < 1) {
    throw DecompositionError(res.value, prices, try_find_partition(g, x, caps));
  }
  TreeCombination combo;
  for (std::size_t j = 0; j < trees.size(); ++j) {
    if (res.primal[j] > 0) combo.members.push_back({trees[j], res.primal[j] / res.value});
  }
  return combo;
}

Rat packing_value_oracle(const Graph& g, const EdgeVector& x, const Caps& caps) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (x.size() != m) throw InvalidInput("packing oracle: vector dimension mismatch");
  if (g.vertex_count() == 1) throw InvalidInput("packing value is unbounded on one vertex");
  const std::vector<EdgeSet> trees = enumerate_spanning_trees(g, caps);
  PackingLp lp;
  lp.rhs = x.values();
  for (const EdgeSet& tree : trees) {
    std::vector<Rat> col(m, Rat(0));
    for (EdgeId e : tree) col[e] = 1;
    lp.add_column(std::move(col), Rat(1));
  }
  const LpResult res = solve_packing_lp(lp);
  if (res.status != LpStatus::optimal) throw std::logic_error("tree packing LP unbounded");
  return res.value;
}

bool verify_domination(const Graph& g, const TreeCombination& combo, const EdgeVector& x) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (x.size() != m || combo.members.empty() || combo.members.size() > std::max<std::size_t>(m, 1)) {
    return false;
  }
  Rat total = 0;
  for (const TreeMember& member : combo.members) {
    if (member.lambda <= 0 || !is_spanning_tree(g, member.tree)) return false;
    total += member.lambda;
  }
  return total == 1 && dominated_by(combo.expectation(m), x);
}

}  // namespace bomc
