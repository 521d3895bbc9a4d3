#pragma once

#include "bomc/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace bomc {

using Vertex = int;
using EdgeId = int;

/// Sorted, duplicate-free vertex ids.
using VertexSet = std::vector<Vertex>;
/// Sorted, duplicate-free edge ids.
using EdgeSet = std::vector<EdgeId>;
/// Per-edge multiplicity in {0,1,2}; a sub-multiset of 2G.
using EdgeMultiset = std::vector<int>;
/// Disjoint nonempty classes covering V.
using Partition = std::vector<VertexSet>;

struct Edge {
  Vertex u;
  Vertex v;
};

/// Connected multigraph without self-loops; edge ids are 0..m-1 in
/// construction order.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_.at(static_cast<std::size_t>(e)); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const EdgeId> incident(Vertex v) const {
    return incidence_.at(static_cast<std::size_t>(v));
  }
  Vertex other_end(EdgeId e, Vertex v) const {
    const Edge& ed = edge(e);
    return ed.u == v ? ed.v : ed.u;
  }

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incidence_;
};

/// Exact rational vector indexed by edge id.
class EdgeVector {
 public:
  EdgeVector() = default;
  explicit EdgeVector(std::size_t m, const Rat& fill = Rat(0)) : v_(m, fill) {}
  explicit EdgeVector(std::vector<Rat> values) : v_(std::move(values)) {}

  static EdgeVector indicator(std::size_t m, const EdgeSet& set);
  static EdgeVector from_multiset(const EdgeMultiset& mult);

  std::size_t size() const noexcept { return v_.size(); }
  Rat& operator[](EdgeId e) { return v_[static_cast<std::size_t>(e)]; }
  const Rat& operator[](EdgeId e) const { return v_[static_cast<std::size_t>(e)]; }
  const std::vector<Rat>& values() const noexcept { return v_; }
  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  /// Sum over the listed edges.
  Rat sum(const EdgeSet& edges) const;
  Rat total() const;
  Rat dot(const EdgeVector& other) const;
  EdgeSet support() const;

  EdgeVector& operator+=(const EdgeVector& o);
  EdgeVector& operator-=(const EdgeVector& o);
  EdgeVector& operator*=(const Rat& s);

  friend EdgeVector operator+(EdgeVector a, const EdgeVector& b) { return a += b; }
  friend EdgeVector operator-(EdgeVector a, const EdgeVector& b) { return a -= b; }
  friend EdgeVector operator*(EdgeVector a, const Rat& s) { return a *= s; }
  friend EdgeVector operator*(const Rat& s, EdgeVector a) { return a *= s; }
  friend bool operator==(const EdgeVector&, const EdgeVector&) = default;

 private:
  std::vector<Rat> v_;
};

/// Componentwise a <= b.
bool dominated_by(const EdgeVector& a, const EdgeVector& b);
bool is_nonnegative(const EdgeVector& a);

/// A cut delta(W). `side` is the canonical side (the one without vertex 0);
/// two cuts are equal iff their edge sets are equal.
struct Cut {
  VertexSet side;
  EdgeSet edges;

  friend bool operator==(const Cut& a, const Cut& b) { return a.edges == b.edges; }
};

/// (G, T, c) with |T| even and c >= 0.
class Instance {
 public:
  Instance(Graph graph, VertexSet terminals, EdgeVector lengths);

  const Graph& graph() const noexcept { return graph_; }
  const VertexSet& terminals() const noexcept { return terminals_; }
  const EdgeVector& lengths() const noexcept { return lengths_; }

 private:
  Graph graph_;
  VertexSet terminals_;
  EdgeVector lengths_;
};

VertexSet normalize(VertexSet s);
VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b);
EdgeSet edge_symmetric_difference(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b);
EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b);
bool contains(const std::vector<int>& sorted, int value);

/// delta(w), canonicalized. Throws InvalidInput for w empty or w = V.
Cut cut_edges(const Graph& g, const VertexSet& w);

/// Edges whose endpoints lie in different classes, each listed once.
EdgeSet partition_cross_edges(const Graph& g, const Partition& p);
void validate_partition(const Graph& g, const Partition& p);

/// T_f: vertices of odd degree in (V, f).
VertexSet odd_degree_vertices(const Graph& g, const EdgeSet& f);

/// True iff m is a T-join of 2G whose support connects V.
bool validate_ttour(const Instance& inst, const EdgeMultiset& m);

/// True iff (V, edges) is connected.
bool spans_connected(const Graph& g, const EdgeSet& edges);

}  // namespace bomc
