#include "bomc/best_of_many.hpp"

#include "bomc/cuts.hpp"
#include "bomc/errors.hpp"
#include "bomc/trees.hpp"
#include "disjoint_sets.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace bomc {

TourResult christofides_single(const Instance& inst, const EdgeSet& f, const Caps& caps) {
  return christofides_single(inst, shortest_path_metric(inst), f, caps);
}

TourResult christofides_single(const Instance& inst, const Metric& metric, const EdgeSet& f,
                               const Caps& caps) {
  const Graph& g = inst.graph();
  if (!is_spanning_tree(g, f)) throw InvalidInput("christofides_single: not a spanning tree");
  const VertexSet tprime = symmetric_difference(odd_degree_vertices(g, f), inst.terminals());
  JoinResult j = min_tjoin(inst, metric, tprime, caps);

  TourResult r;
  r.tree = f;
  r.join = std::move(j.join);
  r.tour.assign(static_cast<std::size_t>(g.edge_count()), 0);
  for (EdgeId e : r.tree) ++r.tour[e];
  for (EdgeId e : r.join) ++r.tour[e];
  r.tree_length = inst.lengths().sum(r.tree);
  r.join_length = std::move(j.length);
  r.length = r.tree_length + r.join_length;
  return r;
}

TourResult min_tree_christofides(const Instance& inst, const Caps& caps) {
  auto tree = minimum_spanning_tree(inst.graph(), inst.lengths());
  return christofides_single(inst, *tree, caps);
}

BomReport best_of_many(const Instance& inst, const Caps& caps) {
  BomReport report;
  report.lp = solve_relaxation(inst, caps);
  report.combo = decompose(inst.graph(), report.lp.x_star, caps);
  const Metric metric = shortest_path_metric(inst);
  for (const TreeMember& member : report.combo.members) {
    report.per_tree.push_back(christofides_single(inst, metric, member.tree, caps));
  }
  for (std::size_t i = 1; i < report.per_tree.size(); ++i) {
    if (report.per_tree[i].length < report.per_tree[report.best].length) report.best = i;
  }
  if (report.lp.value > 0) report.ratio_R = report.best_tour().length / report.lp.value;
  return report;
}

namespace {

// Depth-first search over multiplicity vectors in lexicographic order. A
// branch is cut once its length reaches the incumbent (c >= 0), so only
// strictly better tours replace the first optimum found.
template <typename Length>
class TourSearch {
 public:
  TourSearch(const Instance& inst, std::vector<Length> lengths)
      : g_(inst.graph()),
        lengths_(std::move(lengths)),
        target_(to_mask(inst.terminals())),
        mult_(static_cast<std::size_t>(g_.edge_count()), 0) {}

  bool run() {
    recurse(0, Length(0), 0);
    return found_;
  }
  const EdgeMultiset& best() const { return best_; }

 private:
  void recurse(EdgeId e, const Length& length, SideMask parity) {
    if (found_ && length >= best_length_) return;
    if (e == g_.edge_count()) {
      if (parity == target_ && connected()) {
        found_ = true;
        best_length_ = length;
        best_ = mult_;
      }
      return;
    }
    const SideMask flip = (SideMask{1} << g_.edge(e).u) | (SideMask{1} << g_.edge(e).v);
    const Length& c = lengths_[static_cast<std::size_t>(e)];
    mult_[e] = 0;
    recurse(e + 1, length, parity);
    mult_[e] = 1;
    recurse(e + 1, length + c, parity ^ flip);
    mult_[e] = 2;
    recurse(e + 1, length + c + c, parity);
    mult_[e] = 0;
  }

  bool connected() const {
    detail::DisjointSets ds(g_.vertex_count());
    int components = g_.vertex_count();
    for (EdgeId e = 0; e < g_.edge_count(); ++e) {
      if (mult_[e] != 0 && ds.unite(g_.edge(e).u, g_.edge(e).v)) --components;
    }
    return components == 1;
  }

  const Graph& g_;
  std::vector<Length> lengths_;
  SideMask target_;
  EdgeMultiset mult_;
  bool found_ = false;
  Length best_length_{};
  EdgeMultiset best_;
};

// Lengths over a common denominator, when every tour length fits in int64.
std::optional<std::vector<std::int64_t>> scaled_lengths(const EdgeVector& c) {
  BigInt den = 1;
  for (const Rat& r : c) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(r));
  std::vector<std::int64_t> out;
  BigInt total = 0;
  for (const Rat& r : c) {
    BigInt scaled = boost::multiprecision::numerator(r) * (den / boost::multiprecision::denominator(r));
    total += scaled;
    out.push_back(0);
    if (scaled > std::numeric_limits<std::int64_t>::max() / 4) return std::nullopt;
    out.back() = scaled.convert_to<std::int64_t>();
  }
  if (total > std::numeric_limits<std::int64_t>::max() / 4) return std::nullopt;
  return out;
}

}  // namespace

OptResult brute_force_opt(const Instance& inst, const Caps& caps) {
  const Graph& g = inst.graph();
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (m > caps.bruteforce_edges) throw CapacityError("brute-force optimum", m, caps.bruteforce_edges);
  if (g.vertex_count() > 63) throw CapacityError("brute-force optimum", m, caps.bruteforce_edges);

  OptResult result;
  bool found = false;
  if (auto scaled = scaled_lengths(inst.lengths())) {
    TourSearch<std::int64_t> search(inst, std::move(*scaled));
    found = search.run();
    result.tour = search.best();
  } else {
    TourSearch<Rat> search(inst, inst.lengths().values());
    found = search.run();
    result.tour = search.best();
  }
  if (!found) throw std::logic_error("no T-tour exists; instance invariants are broken");
  result.length = inst.lengths().dot(EdgeVector::from_multiset(result.tour));
  return result;
}

}  // namespace bomc
