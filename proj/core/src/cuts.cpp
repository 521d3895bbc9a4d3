#include "bomc/cuts.hpp"

#include "bomc/errors.hpp"

#include <algorithm>

namespace bomc {

SideMask to_mask(const VertexSet& s) {
  SideMask m = 0;
  for (Vertex v : s) m |= SideMask{1} << v;
  return m;
}

VertexSet from_mask(SideMask mask, int n) {
  VertexSet out;
  for (Vertex v = 0; v < n; ++v) {
    if (mask >> v & 1U) out.push_back(v);
  }
  return out;
}

bool side_lex_less(SideMask a, SideMask b) {
  // Sorted-list comparison: walk both lists from the smallest element.
  while (a != 0 && b != 0) {
    const int va = std::countr_zero(a);
    const int vb = std::countr_zero(b);
    if (va != vb) return va < vb;
    a &= a - 1;
    b &= b - 1;
  }
  return a == 0 && b != 0;
}

CutTable::CutTable(const Graph& g, const EdgeVector& w, std::size_t vertex_cap)
    : n_(g.vertex_count()) {
  if (static_cast<std::size_t>(n_) > vertex_cap || n_ > 62) {
    throw CapacityError("cut enumeration", static_cast<std::size_t>(n_),
                        std::min<std::size_t>(vertex_cap, 62));
  }
  const std::size_t count = std::size_t{1} << (n_ - 1);
  values_.assign(count, Rat(0));
  // Add the lowest vertex of each side to the already-computed remainder.
  for (std::size_t k = 1; k < count; ++k) {
    const SideMask mask = side(k);
    const int v = std::countr_zero(mask);
    const SideMask rest = mask & (mask - 1);
    Rat value = values_[rest >> 1];
    for (EdgeId e : g.incident(v)) {
      const Vertex u = g.other_end(e, v);
      if (rest >> u & 1U) {
        value -= w[e];
      } else {
        value += w[e];
      }
    }
    values_[k] = std::move(value);
  }
}

Cut cut_from_mask(const Graph& g, SideMask side) {
  Cut cut;
  cut.side = from_mask(side, g.vertex_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const bool in_u = (side >> g.edge(e).u & 1U) != 0;
    const bool in_v = (side >> g.edge(e).v & 1U) != 0;
    if (in_u != in_v) cut.edges.push_back(e);
  }
  return cut;
}

std::vector<Cut> all_cuts(const Graph& g, std::size_t vertex_cap) {
  const int n = g.vertex_count();
  if (static_cast<std::size_t>(n) > vertex_cap || n > 62) {
    throw CapacityError("cut enumeration", static_cast<std::size_t>(n),
                        std::min<std::size_t>(vertex_cap, 62));
  }
  std::vector<Cut> out;
  if (n < 2) return out;
  const std::size_t count = std::size_t{1} << (n - 1);
  out.reserve(count - 1);
  for (std::size_t k = 1; k < count; ++k) out.push_back(cut_from_mask(g, CutTable::side(k)));
  return out;
}

OddCut min_odd_cut(const Graph& g, const VertexSet& t, const EdgeVector& w,
                   const Caps& caps) {
  if (t.empty()) throw InvalidInput("no T-cuts exist for empty T");
  if (t.size() % 2 != 0) throw InvalidInput("|T| must be even");
  const CutTable table(g, w, caps.cut_enum);
  const SideMask tmask = to_mask(t);
  std::size_t best = 0;
  for (std::size_t k = 1; k <= table.size(); ++k) {
    if (!odd_intersection(CutTable::side(k), tmask)) continue;
    if (best == 0 || table.value(k) < table.value(best) ||
        (table.value(k) == table.value(best) &&
         side_lex_less(CutTable::side(k), CutTable::side(best)))) {
      best = k;
    }
  }
  return OddCut{cut_from_mask(g, CutTable::side(best)), table.value(best)};
}

}  // namespace bomc
