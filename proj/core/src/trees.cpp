#include "bomc/trees.hpp"

#include "bomc/errors.hpp"
#include "disjoint_sets.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace bomc {

namespace {

void require_tree(const Graph& g, const EdgeSet& f) {
  if (!is_spanning_tree(g, f)) throw InvalidInput("edge set is not a spanning tree");
}

}  // namespace

bool is_spanning_tree(const Graph& g, const EdgeSet& f) {
  if (static_cast<int>(f.size()) != g.vertex_count() - 1) return false;
  for (EdgeId e : f) {
    if (e < 0 || e >= g.edge_count()) return false;
  }
  if (std::adjacent_find(f.begin(), f.end(), std::greater_equal<>()) != f.end()) {
    return false;  // not sorted-unique
  }
  return spans_connected(g, f);
}

EdgeSet tree_join(const Graph& g, const EdgeSet& f, const VertexSet& t) {
  if (t.size() % 2 != 0) throw InvalidInput("tree_join: |t| must be even");
  require_tree(g, f);
  const int n = g.vertex_count();
  std::vector<std::vector<EdgeId>> adj(static_cast<std::size_t>(n));
  for (EdgeId e : f) {
    adj[g.edge(e).u].push_back(e);
    adj[g.edge(e).v].push_back(e);
  }
  // BFS order from the root, remembering each vertex's parent edge.
  std::vector<Vertex> order{0};
  std::vector<EdgeId> parent_edge(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Vertex v = order[i];
    for (EdgeId e : adj[v]) {
      const Vertex u = g.other_end(e, v);
      if (seen[u]) continue;
      seen[u] = 1;
      parent_edge[u] = e;
      order.push_back(u);
    }
  }
  std::vector<char> odd(static_cast<std::size_t>(n), 0);
  for (Vertex v : t) odd[v] = 1;
  EdgeSet out;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (v == 0 || !odd[v]) continue;
    const EdgeId e = parent_edge[v];
    out.push_back(e);
    odd[g.other_end(e, v)] ^= 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Cut fundamental_cut(const Graph& g, const EdgeSet& f, EdgeId e) {
  if (!contains(f, e)) throw InvalidInput("fundamental_cut: edge is not in the tree");
  require_tree(g, f);
  detail::DisjointSets ds(g.vertex_count());
  for (EdgeId other : f) {
    if (other != e) ds.unite(g.edge(other).u, g.edge(other).v);
  }
  const int root = ds.find(g.edge(e).u);
  VertexSet side;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (ds.find(v) == root) side.push_back(v);
  }
  return cut_edges(g, side);
}

std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g, const Caps& caps) {
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (m > caps.tree_enum) throw CapacityError("spanning tree enumeration", m, caps.tree_enum);
  const int need = g.vertex_count() - 1;
  std::vector<EdgeSet> trees;
  EdgeSet current;

  // Choose edges in increasing id order, pruning any edge that closes a
  // cycle or leaves too few edges to finish.
  auto recurse = [&](auto&& self, EdgeId next) -> void {
    if (static_cast<int>(current.size()) == need) {
      if (spans_connected(g, current)) trees.push_back(current);
      return;
    }
    for (EdgeId e = next; e < g.edge_count(); ++e) {
      if (g.edge_count() - e < need - static_cast<int>(current.size())) break;
      detail::DisjointSets ds(g.vertex_count());
      for (EdgeId c : current) ds.unite(g.edge(c).u, g.edge(c).v);
      if (ds.find(g.edge(e).u) == ds.find(g.edge(e).v)) continue;
      current.push_back(e);
      self(self, e + 1);
      current.pop_back();
    }
  };
  recurse(recurse, 0);
  return trees;
}

std::optional<EdgeSet> minimum_spanning_tree(const Graph& g, const EdgeVector& weight,
                                             const std::optional<EdgeSet>& allowed) {
  EdgeSet candidates;
  if (allowed) {
    candidates = *allowed;
  } else {
    candidates.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(candidates.begin(), candidates.end(), 0);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [&](EdgeId a, EdgeId b) {
    if (weight[a] != weight[b]) return weight[a] < weight[b];
    return a < b;
  });
  detail::DisjointSets ds(g.vertex_count());
  EdgeSet tree;
  for (EdgeId e : candidates) {
    if (ds.unite(g.edge(e).u, g.edge(e).v)) tree.push_back(e);
  }
  if (static_cast<int>(tree.size()) != g.vertex_count() - 1) return std::nullopt;
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace bomc
