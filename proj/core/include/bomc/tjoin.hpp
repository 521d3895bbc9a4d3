#pragma once

#include "bomc/caps.hpp"
#include "bomc/graph.hpp"

#include <optional>
#include <vector>

namespace bomc {

/// All-pairs shortest-path distances of (G, c) with one witness path per pair.
class Metric {
 public:
  Metric(int n, std::vector<Rat> dist, std::vector<EdgeId> first_edge,
         const Graph* graph);

  int vertex_count() const noexcept { return n_; }
  const Rat& distance(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  /// Edge ids of the witness path from u to v, in walking order.
  std::vector<EdgeId> path(Vertex u, Vertex v) const;

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(v);
  }

  int n_;
  std::vector<Rat> dist_;
  std::vector<EdgeId> first_edge_;  // -1 on the diagonal
  const Graph* graph_;
};

/// Floyd-Warshall with strict-improvement updates; parallel edges resolve to
/// the shortest one, ties to the smaller id. The Metric refers to
/// inst.graph(), which must outlive it.
Metric shortest_path_metric(const Instance& inst);

struct JoinResult {
  EdgeSet join;
  Rat length;
};

/// Shortest tprime-join: exact minimum-weight perfect matching on tprime
/// under the metric (subset dynamic programming), then the symmetric
/// difference of the matched witness paths.
JoinResult min_tjoin(const Instance& inst, const VertexSet& tprime, const Caps& caps = {});
JoinResult min_tjoin(const Instance& inst, const Metric& metric, const VertexSet& tprime,
                     const Caps& caps = {});

struct QplusVerdict {
  bool contained = true;
  std::optional<Cut> violated;  // a tprime-cut with value < 1 when !contained
  std::optional<Rat> min_cut_value;
};

/// v in Q+(G, tprime): v >= 0 and v(C) >= 1 on every tprime-cut C.
QplusVerdict qplus_contains(const Graph& g, const VertexSet& tprime, const EdgeVector& v,
                            const Caps& caps = {});

}  // namespace bomc
