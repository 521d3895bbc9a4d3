#include "bomc/graph.hpp"

#include "bomc/errors.hpp"
#include "disjoint_sets.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace bomc {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  if (n_ < 1) throw InvalidInput("graph needs at least one vertex");
  incidence_.resize(static_cast<std::size_t>(n_));
  for (std::size_t id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw InvalidInput("edge " + std::to_string(id) + " has an endpoint out of range");
    }
    if (e.u == e.v) throw InvalidInput("edge " + std::to_string(id) + " is a self-loop");
    incidence_[static_cast<std::size_t>(e.u)].push_back(static_cast<EdgeId>(id));
    incidence_[static_cast<std::size_t>(e.v)].push_back(static_cast<EdgeId>(id));
  }
  EdgeSet all(edges_.size());
  std::iota(all.begin(), all.end(), 0);
  if (!spans_connected(*this, all)) throw InvalidInput("graph is not connected");
}

EdgeVector EdgeVector::indicator(std::size_t m, const EdgeSet& set) {
  EdgeVector v(m);
  for (EdgeId e : set) v[e] = 1;
  return v;
}

EdgeVector EdgeVector::from_multiset(const EdgeMultiset& mult) {
  EdgeVector v(mult.size());
  for (std::size_t e = 0; e < mult.size(); ++e) v.v_[e] = mult[e];
  return v;
}

Rat EdgeVector::sum(const EdgeSet& edges) const {
  Rat s = 0;
  for (EdgeId e : edges) s += (*this)[e];
  return s;
}

Rat EdgeVector::total() const {
  Rat s = 0;
  for (const Rat& r : v_) s += r;
  return s;
}

Rat EdgeVector::dot(const EdgeVector& other) const {
  if (other.size() != size()) throw InvalidInput("edge vector dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] != 0 && other.v_[i] != 0) s += v_[i] * other.v_[i];
  }
  return s;
}

EdgeSet EdgeVector::support() const {
  EdgeSet s;
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (v_[i] != 0) s.push_back(static_cast<EdgeId>(i));
  }
  return s;
}

EdgeVector& EdgeVector::operator+=(const EdgeVector& o) {
  if (o.size() != size()) throw InvalidInput("edge vector dimension mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
  return *this;
}

EdgeVector& EdgeVector::operator-=(const EdgeVector& o) {
  if (o.size() != size()) throw InvalidInput("edge vector dimension mismatch");
  for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
  return *this;
}

EdgeVector& EdgeVector::operator*=(const Rat& s) {
  for (Rat& r : v_) r *= s;
  return *this;
}

bool dominated_by(const EdgeVector& a, const EdgeVector& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[static_cast<EdgeId>(i)] > b[static_cast<EdgeId>(i)]) return false;
  }
  return true;
}

bool is_nonnegative(const EdgeVector& a) {
  return std::all_of(a.begin(), a.end(), [](const Rat& r) { return r >= 0; });
}

Instance::Instance(Graph graph, VertexSet terminals, EdgeVector lengths)
    : graph_(std::move(graph)),
      terminals_(normalize(std::move(terminals))),
      lengths_(std::move(lengths)) {
  for (Vertex v : terminals_) {
    if (v < 0 || v >= graph_.vertex_count()) throw InvalidInput("terminal out of range");
  }
  if (terminals_.size() % 2 != 0) throw InvalidInput("|T| must be even");
  if (lengths_.size() != static_cast<std::size_t>(graph_.edge_count())) {
    throw InvalidInput("length vector does not match edge count");
  }
  if (!is_nonnegative(lengths_)) throw InvalidInput("edge lengths must be nonnegative");
}

VertexSet normalize(VertexSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

VertexSet symmetric_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::back_inserter(out));
  return out;
}

EdgeSet edge_symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  return symmetric_difference(a, b);
}

EdgeSet edge_intersection(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

EdgeSet edge_difference(const EdgeSet& a, const EdgeSet& b) {
  EdgeSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool contains(const std::vector<int>& sorted, int value) {
  return std::binary_search(sorted.begin(), sorted.end(), value);
}

Cut cut_edges(const Graph& g, const VertexSet& w) {
  const int n = g.vertex_count();
  std::vector<char> in(static_cast<std::size_t>(n), 0);
  int count = 0;
  for (Vertex v : w) {
    if (v < 0 || v >= n) throw InvalidInput("cut side vertex out of range");
    if (!in[v]) ++count;
    in[v] = 1;
  }
  if (count == 0 || count == n) {
    throw InvalidInput("invalid cut: side must be a nonempty proper subset of V");
  }
  const bool flip = in[0] != 0;
  Cut cut;
  for (Vertex v = 0; v < n; ++v) {
    if ((in[v] != 0) != flip) cut.side.push_back(v);
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (in[g.edge(e).u] != in[g.edge(e).v]) cut.edges.push_back(e);
  }
  return cut;
}

void validate_partition(const Graph& g, const Partition& p) {
  const int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int covered = 0;
  for (const VertexSet& cls : p) {
    if (cls.empty()) throw InvalidInput("invalid partition: empty class");
    for (Vertex v : cls) {
      if (v < 0 || v >= n) throw InvalidInput("invalid partition: vertex out of range");
      if (seen[v]) throw InvalidInput("invalid partition: classes overlap");
      seen[v] = 1;
      ++covered;
    }
  }
  if (covered != n) throw InvalidInput("invalid partition: classes do not cover V");
}

EdgeSet partition_cross_edges(const Graph& g, const Partition& p) {
  validate_partition(g, p);
  std::vector<int> cls(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t k = 0; k < p.size(); ++k) {
    for (Vertex v : p[k]) cls[v] = static_cast<int>(k);
  }
  EdgeSet out;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (cls[g.edge(e).u] != cls[g.edge(e).v]) out.push_back(e);
  }
  return out;
}

VertexSet odd_degree_vertices(const Graph& g, const EdgeSet& f) {
  std::vector<char> parity(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : f) {
    parity[g.edge(e).u] ^= 1;
    parity[g.edge(e).v] ^= 1;
  }
  VertexSet out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (parity[v]) out.push_back(v);
  }
  return out;
}

bool spans_connected(const Graph& g, const EdgeSet& edges) {
  detail::DisjointSets ds(g.vertex_count());
  int components = g.vertex_count();
  for (EdgeId e : edges) {
    if (ds.unite(g.edge(e).u, g.edge(e).v)) --components;
  }
  return components == 1;
}

bool validate_ttour(const Instance& inst, const EdgeMultiset& m) {
  const Graph& g = inst.graph();
  if (m.size() != static_cast<std::size_t>(g.edge_count())) return false;
  std::vector<char> parity(static_cast<std::size_t>(g.vertex_count()), 0);
  EdgeSet support;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const int k = m[static_cast<std::size_t>(e)];
    if (k < 0 || k > 2) return false;
    if (k == 0) continue;
    support.push_back(e);
    if (k % 2 == 1) {
      parity[g.edge(e).u] ^= 1;
      parity[g.edge(e).v] ^= 1;
    }
  }
  VertexSet odd;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (parity[v]) odd.push_back(v);
  }
  return odd == inst.terminals() && spans_connected(g, support);
}

}  // namespace bomc
