#pragma once

#include "bomc/caps.hpp"
#include "bomc/graph.hpp"

#include <optional>
#include <vector>

namespace bomc {

/// |f| = n - 1 and (V, f) connected.
bool is_spanning_tree(const Graph& g, const EdgeSet& f);

/// F(t): the unique subset of the spanning tree f whose odd-degree set is t.
/// Computed by leaf-to-root parity propagation from vertex 0.
EdgeSet tree_join(const Graph& g, const EdgeSet& f, const VertexSet& t);

/// delta(K) for K a component of f minus e.
Cut fundamental_cut(const Graph& g, const EdgeSet& f, EdgeId e);

/// All spanning trees, in lexicographic order of their sorted edge lists.
std::vector<EdgeSet> enumerate_spanning_trees(const Graph& g, const Caps& caps = {});

/// Kruskal over `allowed` (all edges when empty optional) with ties broken
/// by edge id. Returns nullopt if `allowed` does not connect V.
std::optional<EdgeSet> minimum_spanning_tree(const Graph& g, const EdgeVector& weight,
                                             const std::optional<EdgeSet>& allowed = {});

}  // namespace bomc
