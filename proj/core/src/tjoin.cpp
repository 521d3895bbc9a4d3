#include "bomc/tjoin.hpp"

#include "bomc/cuts.hpp"
#include "bomc/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace bomc {

Metric::Metric(int n, std::vector<Rat> dist, std::vector<EdgeId> first_edge,
               const Graph* graph)
    : n_(n), dist_(std::move(dist)), first_edge_(std::move(first_edge)), graph_(graph) {}

std::vector<EdgeId> Metric::path(Vertex u, Vertex v) const {
  std::vector<EdgeId> out;
  Vertex at = u;
  while (at != v) {
    const EdgeId e = first_edge_[index(at, v)];
    if (e < 0 || static_cast<int>(out.size()) >= n_) {
      throw std::logic_error("metric witness path is broken");
    }
    out.push_back(e);
    at = graph_->other_end(e, at);
  }
  return out;
}

Metric shortest_path_metric(const Instance& inst) {
  const Graph& g = inst.graph();
  const int n = g.vertex_count();
  const auto N = static_cast<std::size_t>(n);
  std::vector<Rat> dist(N * N);
  std::vector<char> finite(N * N, 0);
  std::vector<EdgeId> first(N * N, -1);
  for (std::size_t v = 0; v < N; ++v) finite[v * N + v] = 1;

  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto u = static_cast<std::size_t>(g.edge(e).u);
    const auto v = static_cast<std::size_t>(g.edge(e).v);
    const Rat& c = inst.lengths()[e];
    for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
      if (!finite[a * N + b] || c < dist[a * N + b]) {
        finite[a * N + b] = 1;
        dist[a * N + b] = c;
        first[a * N + b] = e;
      }
    }
  }
  for (std::size_t k = 0; k < N; ++k) {
    for (std::size_t i = 0; i < N; ++i) {
      if (i == k || !finite[i * N + k]) continue;
      for (std::size_t j = 0; j < N; ++j) {
        if (j == i || j == k || !finite[k * N + j]) continue;
        Rat through = dist[i * N + k] + dist[k * N + j];
        if (!finite[i * N + j] || through < dist[i * N + j]) {
          finite[i * N + j] = 1;
          dist[i * N + j] = std::move(through);
          first[i * N + j] = first[i * N + k];
        }
      }
    }
  }
  return Metric(n, std::move(dist), std::move(first), &g);
}

JoinResult min_tjoin(const Instance& inst, const VertexSet& tprime, const Caps& caps) {
  if (tprime.empty()) return JoinResult{{}, Rat(0)};
  return min_tjoin(inst, shortest_path_metric(inst), tprime, caps);
}

JoinResult min_tjoin(const Instance& inst, const Metric& metric, const VertexSet& tprime,
                     const Caps& caps) {
  const VertexSet t = normalize(tprime);
  if (t.size() % 2 != 0) throw InvalidInput("T'-join needs |T'| even");
  if (t.size() > caps.matching) throw CapacityError("T'-join matching", t.size(), caps.matching);
  for (Vertex v : t) {
    if (v < 0 || v >= inst.graph().vertex_count()) throw InvalidInput("T' vertex out of range");
  }
  if (t.empty()) return JoinResult{{}, Rat(0)};

  // cost[mask] = cheapest perfect matching of the terminals in mask. The
  // lowest terminal is paired with each candidate in increasing order and
  // only strict improvements are kept, which yields the lexicographically
  // smallest pairing among equal-cost ones.
  const std::size_t k = t.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  std::vector<Rat> cost(full + 1);
  std::vector<std::int8_t> partner(full + 1, -1);
  for (std::size_t mask = 1; mask <= full; ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    const int i = std::countr_zero(mask);
    bool have = false;
    for (std::size_t rest = mask & (mask - 1); rest != 0; rest &= rest - 1) {
      const int j = std::countr_zero(rest);
      const std::size_t sub = mask & ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
      Rat candidate = metric.distance(t[i], t[j]) + cost[sub];
      if (!have || candidate < cost[mask]) {
        cost[mask] = std::move(candidate);
        partner[mask] = static_cast<std::int8_t>(j);
        have = true;
      }
    }
  }

  std::vector<char> in_join(static_cast<std::size_t>(inst.graph().edge_count()), 0);
  for (std::size_t mask = full; mask != 0;) {
    const int i = std::countr_zero(mask);
    const int j = partner[mask];
    for (EdgeId e : metric.path(t[i], t[j])) in_join[e] ^= 1;
    mask &= ~(std::size_t{1} << i) & ~(std::size_t{1} << j);
  }
  JoinResult result;
  for (EdgeId e = 0; e < inst.graph().edge_count(); ++e) {
    if (in_join[e]) result.join.push_back(e);
  }
  result.length = inst.lengths().sum(result.join);
  return result;
}

QplusVerdict qplus_contains(const Graph& g, const VertexSet& tprime, const EdgeVector& v,
                            const Caps& caps) {
  if (!is_nonnegative(v)) throw InvalidInput("Q+ membership needs v >= 0");
  QplusVerdict verdict;
  if (tprime.empty()) return verdict;
  OddCut odd = min_odd_cut(g, normalize(tprime), v, caps);
  verdict.min_cut_value = odd.value;
  if (odd.value < 1) {
    verdict.contained = false;
    verdict.violated = std::move(odd.cut);
  }
  return verdict;
}

}  // namespace bomc
