#include "bomc/relaxation.hpp"

#include "bomc/cuts.hpp"
#include "bomc/errors.hpp"
#include "bomc/simplex.hpp"

#include <sstream>
#include <stdexcept>

namespace bomc {

namespace {

LpConstraint make_cut_constraint(Cut cut) {
  LpConstraint c;
  c.edges = cut.edges;
  c.rhs = 2;
  c.shape = std::move(cut);
  return c;
}

LpConstraint make_partition_constraint(const Graph& g, Partition p) {
  LpConstraint c;
  c.edges = partition_cross_edges(g, p);
  c.rhs = static_cast<int>(p.size()) - 1;
  c.shape = std::move(p);
  return c;
}

void print_set(std::ostream& out, const VertexSet& s, char sep) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out << sep;
    out << s[i];
  }
}

}  // namespace

std::string describe(const LpConstraint& c) {
  std::ostringstream out;
  if (const auto* cut = std::get_if<Cut>(&c.shape)) {
    out << "cut ";
    print_set(out, cut->side, ' ');
  } else {
    const auto& p = std::get<Partition>(c.shape);
    out << "partition ";
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << '|';
      print_set(out, p[k], ',');
    }
  }
  out << " >= " << to_string(c.rhs);
  return out.str();
}

std::optional<Cut> separate_even_cut(const Instance& inst, const EdgeVector& x,
                                     const Caps& caps) {
  const Graph& g = inst.graph();
  const CutTable table(g, x, caps.cut_enum);
  const SideMask tmask = to_mask(inst.terminals());
  std::size_t best = 0;
  for (std::size_t k = 1; k <= table.size(); ++k) {
    if (odd_intersection(CutTable::side(k), tmask) || table.value(k) >= 2) continue;
    if (best == 0 || table.value(k) < table.value(best) ||
        (table.value(k) == table.value(best) &&
         side_lex_less(CutTable::side(k), CutTable::side(best)))) {
      best = k;
    }
  }
  if (best == 0) return std::nullopt;
  return cut_from_mask(g, CutTable::side(best));
}

std::optional<Partition> separate_partition(const Instance& inst, const EdgeVector& x,
                                            const Caps& caps) {
  const Graph& g = inst.graph();
  const int n = g.vertex_count();
  if (static_cast<std::size_t>(n) > caps.partition_enum) {
    throw CapacityError("partition enumeration", static_cast<std::size_t>(n),
                        caps.partition_enum);
  }
  // Edges grouped by their larger endpoint, so that assigning vertex v a
  // class settles exactly those edges.
  std::vector<std::vector<std::pair<Vertex, EdgeId>>> back(static_cast<std::size_t>(n));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [u, v] = g.edge(e);
    if (u < v) {
      back[v].push_back({u, e});
    } else {
      back[u].push_back({v, e});
    }
  }

  std::vector<int> cls(static_cast<std::size_t>(n), 0);
  std::vector<int> best_cls;
  Rat best_violation = 0;  // only strictly positive violations count

  auto recurse = [&](auto&& self, Vertex v, int classes, const Rat& crossing) -> void {
    if (v == n) {
      Rat violation = Rat(classes - 1) - crossing;
      if (violation > best_violation) {
        best_violation = std::move(violation);
        best_cls = cls;
      }
      return;
    }
    for (int k = 0; k <= classes; ++k) {
      cls[v] = k;
      Rat next = crossing;
      for (const auto& [u, e] : back[v]) {
        if (cls[u] != k) next += x[e];
      }
      self(self, v + 1, std::max(classes, k + 1), next);
    }
  };
  cls[0] = 0;
  recurse(recurse, 1, 1, Rat(0));

  if (best_cls.empty()) return std::nullopt;
  int classes = 0;
  for (int c : best_cls) classes = std::max(classes, c + 1);
  Partition p(static_cast<std::size_t>(classes));
  for (Vertex v = 0; v < n; ++v) p[best_cls[v]].push_back(v);
  return p;
}

bool in_relaxation(const Instance& inst, const EdgeVector& x, const Caps& caps) {
  if (x.size() != static_cast<std::size_t>(inst.graph().edge_count())) return false;
  for (const Rat& r : x) {
    if (r < 0 || r > 2) return false;
  }
  return !separate_even_cut(inst, x, caps) && !separate_partition(inst, x, caps);
}

LpSolution solve_relaxation(const Instance& inst, const Caps& caps) {
  const Graph& g = inst.graph();
  const auto m = static_cast<std::size_t>(g.edge_count());
  std::vector<LpConstraint> constraints;
  LpSolution sol;

  // The LP is solved through its dual
  //   max sum_k rhs_k y_k - 2 sum_e z_e  s.t.  sum_k y_k chi_k - z <= c,
  // whose slack basis is feasible because c >= 0; x* is the row price vector.
  for (;;) {
    ++sol.rounds;
    PackingLp dual;
    dual.rhs = inst.lengths().values();
    for (const LpConstraint& c : constraints) {
      std::vector<Rat> col(m, Rat(0));
      for (EdgeId e : c.edges) col[e] = 1;
      dual.add_column(std::move(col), c.rhs);
    }
    for (std::size_t e = 0; e < m; ++e) {
      std::vector<Rat> col(m, Rat(0));
      col[e] = -1;
      dual.add_column(std::move(col), Rat(-2));
    }
    LpResult res = solve_packing_lp(dual);
    if (res.status != LpStatus::optimal) {
      throw std::logic_error("relaxation dual is unbounded; P(G,T) cannot be empty");
    }
    EdgeVector x(std::move(res.row_prices));
    if (x.dot(inst.lengths()) != res.value) {
      throw std::logic_error("relaxation duality gap is nonzero");
    }

    auto cut = separate_even_cut(inst, x, caps);
    auto partition = separate_partition(inst, x, caps);
    if (!cut && !partition) {
      sol.value = res.value;
      sol.x_star = std::move(x);
      break;
    }
    if (cut) constraints.push_back(make_cut_constraint(std::move(*cut)));
    if (partition) constraints.push_back(make_partition_constraint(g, std::move(*partition)));
  }

  sol.generated = constraints.size();
  for (LpConstraint& c : constraints) {
    if (sol.x_star.sum(c.edges) == c.rhs) sol.active_constraints.push_back(std::move(c));
  }
  return sol;
}

}  // namespace bomc
