#pragma once

// Test-only reference implementations and corpus helpers. The reference
// routines are deliberately dumb and independent of the library's algorithm
// paths so they can serve as oracles.

#include <algorithm>
#include <random>
#include <vector>

#include "feasflow/generator.hpp"
#include "feasflow/network.hpp"
#include "feasflow/tree_routing.hpp"

namespace testutil {

using namespace feasflow;

// Exhaustive feasibility: tries every integer flow vector with
// 0 <= f(a) <= cap(a) and reports whether any of them balances every vertex.
// Exponential; tiny nets only.
inline bool enumerate_feasible(const Network& net) {
  const std::size_t m = net.arc_count();
  std::vector<Units> f(m, 0);
  for (;;) {
    std::vector<Units> balance(static_cast<std::size_t>(net.vertex_count()) + 1, 0);
    for (Vertex v = 1; v <= net.vertex_count(); ++v)
      balance[static_cast<std::size_t>(v)] = net.import(v);
    for (std::size_t i = 0; i < m; ++i) {
      balance[static_cast<std::size_t>(net.arcs()[i].head)] += f[i];
      balance[static_cast<std::size_t>(net.arcs()[i].tail)] -= f[i];
    }
    if (std::all_of(balance.begin(), balance.end(), [](Units b) { return b == 0; }))
      return true;
    std::size_t i = 0;
    while (i < m && f[i] == net.arcs()[i].capacity) f[i++] = 0;
    if (i == m) return false;
    ++f[i];
  }
}

// Demand sums by explicit root walks from every vertex; quadratic.
inline std::vector<Units> demand_sums_by_walk(const Network& net, const RootedTree& out_tree) {
  std::vector<Units> sums(static_cast<std::size_t>(net.vertex_count()) + 1, 0);
  for (Vertex w = 1; w <= net.vertex_count(); ++w) {
    const Units demand = std::max<Units>(-net.import(w), 0);
    Vertex x = w;
    for (;;) {
      sums[static_cast<std::size_t>(x)] += demand;
      if (x == out_tree.root) break;
      x = out_tree.parent(x);
    }
  }
  return sums;
}

// desc[x][v] = 1 iff v is a descendant of x in the out-tree, x included.
inline std::vector<std::vector<char>> descendant_table(const Network& net,
                                                       const RootedTree& out_tree) {
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  std::vector<std::vector<char>> desc(n + 1, std::vector<char>(n + 1, 0));
  for (Vertex v = 1; v <= net.vertex_count(); ++v) {
    Vertex x = v;
    for (;;) {
      desc[static_cast<std::size_t>(x)][static_cast<std::size_t>(v)] = 1;
      if (x == out_tree.root) break;
      x = out_tree.parent(x);
    }
  }
  return desc;
}

// Random generator spec for corpus-style tests; spreads stay at or below
// n/2 so the supply and demand sets never collide.
inline GenSpec random_spec(std::mt19937_64& rng, Vertex n_min, Vertex n_max,
                           std::size_t extra_max, Units supply_max, CapacityMode mode) {
  GenSpec spec;
  spec.vertex_count =
      n_min + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n_max - n_min + 1));
  spec.extra_arcs = rng() % (extra_max + 1);
  spec.total_supply = 1 + static_cast<Units>(rng() % static_cast<std::uint64_t>(supply_max));
  spec.capacity_mode = mode;
  const Vertex half = std::max<Vertex>(spec.vertex_count / 2, 1);
  spec.supply_spread = 1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(half));
  spec.demand_spread = 1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(half));
  spec.seed = rng();
  return spec;
}

// Small arbitrary network with zero imports; no connectivity guarantee.
inline Network random_loose_network(std::mt19937_64& rng, Vertex n_max, std::size_t m_max,
                                    Units cap_max) {
  const Vertex n = 1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n_max));
  const std::size_t m = rng() % (m_max + 1);
  std::vector<Arc> arcs;
  arcs.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    arcs.push_back({1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)),
                    1 + static_cast<Vertex>(rng() % static_cast<std::uint64_t>(n)),
                    static_cast<Units>(rng() % static_cast<std::uint64_t>(cap_max + 1))});
  return Network(n, std::move(arcs), std::vector<Units>(static_cast<std::size_t>(n) + 1, 0));
}

}  // namespace testutil
