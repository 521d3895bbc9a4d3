#include "bomc/generator.hpp"

#include "bomc/errors.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <utility>

namespace bomc {

namespace {

// Uniform draw from [0, bound) by rejection; std::uniform_int_distribution
// is not reproducible across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

int pick(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace

Instance gen_random(const GenParams& p) {
  if (p.n < 1) throw InvalidInput("gen_random: n must be at least 1");
  if (p.m < p.n - 1) throw InvalidInput("gen_random: m < n - 1 cannot be connected");
  if (p.n == 1 && p.m > 0) throw InvalidInput("gen_random: one vertex admits no edges");
  if (p.t_size < 0 || p.t_size % 2 != 0 || p.t_size > p.n) {
    throw InvalidInput("gen_random: |T| must be even and at most n");
  }
  if (p.weight_lo < 0 || p.weight_lo > p.weight_hi) {
    throw InvalidInput("gen_random: need 0 <= weight_lo <= weight_hi");
  }

  std::mt19937_64 rng(p.seed);
  std::vector<Vertex> order(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) order[i] = i;
  for (int i = p.n - 1; i > 0; --i) std::swap(order[i], order[pick(rng, 0, i)]);

  std::vector<Edge> edges;
  std::set<std::pair<Vertex, Vertex>> used;
  auto add = [&](Vertex a, Vertex b) {
    edges.push_back({std::min(a, b), std::max(a, b)});
    used.emplace(std::min(a, b), std::max(a, b));
  };
  for (int i = 1; i < p.n; ++i) add(order[i], order[pick(rng, 0, i - 1)]);

  const std::size_t simple_pairs = static_cast<std::size_t>(p.n) * (p.n - 1) / 2;
  while (static_cast<int>(edges.size()) < p.m) {
    const Vertex a = pick(rng, 0, p.n - 1);
    Vertex b = pick(rng, 0, p.n - 2);
    if (b >= a) ++b;
    if (used.size() < simple_pairs && used.count({std::min(a, b), std::max(a, b)}) != 0) {
      continue;
    }
    add(a, b);
  }

  EdgeVector weights(edges.size());
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const int d = pick(rng, 1, 4);
    weights[static_cast<EdgeId>(e)] = Rat(pick(rng, p.weight_lo * d, p.weight_hi * d), d);
  }

  std::vector<Vertex> pool(static_cast<std::size_t>(p.n));
  for (int i = 0; i < p.n; ++i) pool[i] = i;
  for (int i = 0; i < p.t_size; ++i) std::swap(pool[i], pool[pick(rng, i, p.n - 1)]);
  VertexSet terminals(pool.begin(), pool.begin() + p.t_size);
  std::sort(terminals.begin(), terminals.end());

  return Instance(Graph(p.n, std::move(edges)), std::move(terminals), std::move(weights));
}

}  // namespace bomc
