#include "feasflow/tree_routing.hpp"

#include <algorithm>
#include <cassert>

#include "adjacency.hpp"
#include "memory.hpp"

namespace feasflow {

namespace {

// Positional image of a breadth-first spanning tree: position 0 is the root
// and positions follow discovery order, so parents always sit at lower
// positions and a reverse position scan is leaf-to-root. The solver works on
// this form directly; the vertex-indexed RootedTree is widened from it.
struct BfsSkeleton {
  detail::raw_vector<Vertex> vertex;            // position -> vertex
  detail::raw_vector<std::uint32_t> parent_pos; // position -> parent position; [0] unused
  detail::raw_vector<std::uint32_t> parent_arc; // position -> parent arc;      [0] unused
};

BfsSkeleton bfs_skeleton(const Network& net, const detail::Csr& csr, Vertex root) {
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());

  // The seen-probe runs once per arc, so it gets a bitmap that stays in
  // cache; everything else is written append-only.
  std::vector<std::uint64_t> seen((n + 64) / 64, 0);
  const auto test_and_set = [&](std::size_t v) {
    std::uint64_t& word = seen[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    const bool was = word & bit;
    word |= bit;
    return was;
  };

  BfsSkeleton sk;
  sk.vertex.resize(n);
  sk.parent_pos.resize(n);
  sk.parent_arc.resize(n);
  test_and_set(static_cast<std::size_t>(root));
  sk.vertex[0] = root;
  std::size_t count = 1;
  for (std::size_t qi = 0; qi < count; ++qi) {
    // The frontier usually runs well ahead of the cursor, so the offset and
    // entry lines for upcoming vertices can be fetched early.
    if (qi + 8 < count)
      __builtin_prefetch(&csr.offsets[static_cast<std::size_t>(sk.vertex[qi + 8])]);
    if (qi + 4 < count)
      __builtin_prefetch(&csr.entries[csr.offsets[static_cast<std::size_t>(sk.vertex[qi + 4])]]);
    const auto v = static_cast<std::size_t>(sk.vertex[qi]);
    for (std::size_t i = csr.offsets[v]; i < csr.offsets[v + 1]; ++i) {
      // Out-trees grow along arcs leaving v, in-trees along arcs entering v;
      // the CSR already stores the far endpoint either way.
      const Vertex to = static_cast<Vertex>(csr.entries[i].neighbor);
      if (!test_and_set(static_cast<std::size_t>(to))) {
        sk.vertex[count] = to;
        sk.parent_pos[count] = static_cast<std::uint32_t>(qi);
        sk.parent_arc[count] = csr.entries[i].arc;
        ++count;
      }
    }
  }
  if (count != n) throw NotStronglyConnected();
  return sk;
}

RootedTree widen_tree(const BfsSkeleton& sk, Vertex root, TreeKind kind, std::size_t n) {
  RootedTree tree;
  tree.root = root;
  tree.kind = kind;
  tree.parent_arc.assign(n + 1, RootedTree::no_arc);
  tree.parent_vertex.assign(n + 1, 0);
  for (std::size_t p = 1; p < n; ++p) {
    const auto v = static_cast<std::size_t>(sk.vertex[p]);
    tree.parent_arc[v] = sk.parent_arc[p];
    tree.parent_vertex[v] = sk.vertex[sk.parent_pos[p]];
  }
  // BFS discovers parents before children, so the reversed discovery order
  // (root dropped) processes every vertex before its parent.
  tree.order.assign(sk.vertex.rbegin(), sk.vertex.rend() - 1);
  return tree;
}

void check_root(const Network& net, Vertex root) {
  if (root < 1 || root > net.vertex_count())
    throw RangeError("root " + std::to_string(root) + " out of 1.." +
                     std::to_string(net.vertex_count()));
}

void reset_supply_fields(RoutingTrace* trace, std::size_t arc_count) {
  if (!trace) return;
  trace->supply_events.clear();
  trace->supply_increase.assign(arc_count, 0);
  trace->descendant_sum_snapshots.clear();
}

void reset_demand_fields(RoutingTrace* trace, std::size_t arc_count) {
  if (!trace) return;
  trace->demand_events.clear();
  trace->demand_increase.assign(arc_count, 0);
}

std::vector<Units> initial_supplies(const Network& net) {
  std::vector<Units> supply(static_cast<std::size_t>(net.vertex_count()) + 1, 0);
  for (Vertex v = 1; v <= net.vertex_count(); ++v)
    supply[static_cast<std::size_t>(v)] = std::max<Units>(net.import(v), 0);
  return supply;
}

std::vector<Units> initial_demands(const Network& net) {
  std::vector<Units> demand(static_cast<std::size_t>(net.vertex_count()) + 1, 0);
  for (Vertex v = 1; v <= net.vertex_count(); ++v)
    demand[static_cast<std::size_t>(v)] = std::max<Units>(-net.import(v), 0);
  return demand;
}

void check_flow_size(const Network& net, const std::vector<Units>& flow) {
  if (flow.size() != net.arc_count()) throw LengthMismatch(flow.size(), net.arc_count());
}

Units min_capacity_arc(const Network& net, std::size_t& arg) {
  Units best = max_magnitude;
  arg = 0;
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    if (net.arcs()[i].capacity < best) {
      best = net.arcs()[i].capacity;
      arg = i;
    }
  }
  return net.arc_count() ? best : 0;
}

// Untraced solves run on the positional skeletons: reverse position scans
// are the leaf-to-root order, parent links point at lower positions, and the
// only vertex-indexed array left is the small cross-tree join table. Same
// processing order and arithmetic as the public routing passes, so the
// outputs are identical; the instrumented path pins that in tests.
Flow solve_untraced(const Network& net, Vertex root, bool capped) {
  const Units supply_bound = total_supply(net);
  check_root(net, root);
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  detail::Adjacency adj = detail::build_adjacency(net);
  const BfsSkeleton in_sk = bfs_skeleton(net, adj.reverse, root);
  const BfsSkeleton out_sk = bfs_skeleton(net, adj.forward, root);
  adj.forward = detail::Csr{};  // the skeletons carry everything the passes need
  adj.reverse = detail::Csr{};

  if (!capped && supply_bound > max_magnitude / 2)
    throw RangeError("required capacity 2B exceeds the representable bound");
  const Units required = capped ? supply_bound : 2 * supply_bound;
  if (net.arc_count() && adj.min_capacity < required)
    throw CapacityTooSmall(adj.min_capacity_arc, adj.min_capacity, required);

  // Demands and their subtree sums over out-tree positions.
  detail::raw_vector<Units> demand0(n);
  for (std::size_t p = 0; p < n; ++p) {
    demand0[p] = std::max<Units>(-net.import(out_sk.vertex[p]), 0);
  }
  detail::raw_vector<Units> sums(demand0.begin(), demand0.end());
  for (std::size_t p = n - 1; p > 0; --p) {
    sums[out_sk.parent_pos[p]] += sums[p];
  }

  Flow flow{std::vector<Units>(net.arc_count(), 0)};
  detail::raw_vector<Units> supply(n);
  for (std::size_t p = 0; p < n; ++p) {
    supply[p] = std::max<Units>(net.import(in_sk.vertex[p]), 0);
  }

  detail::raw_vector<Units> by_vertex(n + 1);  // cross-tree join table
  if (capped) {
    for (std::size_t p = 0; p < n; ++p) {
      by_vertex[static_cast<std::size_t>(out_sk.vertex[p])] = sums[p];
    }
    for (std::size_t p = n - 1; p > 0; --p) {
      const Units moved = std::min(
          supply[p], supply_bound - by_vertex[static_cast<std::size_t>(in_sk.vertex[p])]);
      flow.values[in_sk.parent_arc[p]] += moved;
      supply[in_sk.parent_pos[p]] += moved;
      supply[p] -= moved;
    }
  } else {
    for (std::size_t p = n - 1; p > 0; --p) {
      flow.values[in_sk.parent_arc[p]] += supply[p];
      supply[in_sk.parent_pos[p]] += supply[p];
      supply[p] = 0;
    }
  }

  detail::raw_vector<Units> net_demand(n);
  if (capped) {
    for (std::size_t p = 0; p < n; ++p) {
      by_vertex[static_cast<std::size_t>(in_sk.vertex[p])] = supply[p];
    }
    for (std::size_t p = 0; p < n; ++p) {
      net_demand[p] = demand0[p] - by_vertex[static_cast<std::size_t>(out_sk.vertex[p])];
    }
  } else {
    std::copy(demand0.begin(), demand0.end(), net_demand.begin());
  }
  for (std::size_t p = n - 1; p > 0; --p) {
    const Units moved = net_demand[p];
    if (moved < 0) throw NegativeDemandAtProcessing(out_sk.vertex[p], moved);
    flow.values[out_sk.parent_arc[p]] += moved;
    net_demand[out_sk.parent_pos[p]] += moved;
  }
  assert(net_demand.empty() || net_demand[0] == 0);
  return flow;
}

}  // namespace

TreePair build_trees(const Network& net, Vertex root) {
  check_root(net, root);
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  return {widen_tree(bfs_skeleton(net, detail::reverse_csr(net), root), root,
                     TreeKind::in_tree, n),
          widen_tree(bfs_skeleton(net, detail::forward_csr(net), root), root,
                     TreeKind::out_tree, n)};
}

DemandSums compute_demand_sums(const Network& net, const RootedTree& out_tree) {
  DemandSums sums;
  sums.values = initial_demands(net);
  // Children precede parents, so each vertex's subtree is complete when the
  // vertex itself is folded into its parent.
  for (const Vertex v : out_tree.order)
    sums.values[static_cast<std::size_t>(out_tree.parent(v))] +=
        sums.values[static_cast<std::size_t>(v)];
  return sums;
}

std::vector<Units> route_supplies(const Network& net, const RootedTree& in_tree,
                                  std::vector<Units>& flow, RoutingTrace* trace) {
  check_flow_size(net, flow);
  reset_supply_fields(trace, net.arc_count());
  std::vector<Units> supply = initial_supplies(net);
  for (const Vertex v : in_tree.order) {
    const std::size_t arc = in_tree.parent_arc[static_cast<std::size_t>(v)];
    const Units moved = supply[static_cast<std::size_t>(v)];
    flow[arc] += moved;
    supply[static_cast<std::size_t>(in_tree.parent(v))] += moved;
    supply[static_cast<std::size_t>(v)] = 0;
    if (trace) {
      trace->supply_events.push_back({v, moved, moved, 0});
      trace->supply_increase[arc] += moved;
    }
  }
  return supply;
}

void route_demands(const Network& net, const RootedTree& out_tree,
                   std::vector<Units>& flow, RoutingTrace* trace) {
  check_flow_size(net, flow);
  reset_demand_fields(trace, net.arc_count());
  std::vector<Units> demand = initial_demands(net);
  for (const Vertex w : out_tree.order) {
    const std::size_t arc = out_tree.parent_arc[static_cast<std::size_t>(w)];
    const Units moved = demand[static_cast<std::size_t>(w)];
    flow[arc] += moved;
    demand[static_cast<std::size_t>(out_tree.parent(w))] += moved;
    if (trace) {
      trace->demand_events.push_back({w, moved});
      trace->demand_increase[arc] += moved;
    }
  }
}

std::vector<Units> route_supplies_capped(const Network& net, const RootedTree& in_tree,
                                         const DemandSums& demand_sums,
                                         std::vector<Units>& flow, RoutingTrace* trace,
                                         const RootedTree* out_tree) {
  check_flow_size(net, flow);
  reset_supply_fields(trace, net.arc_count());
  // demand_sums[root] is the total demand, i.e. the total supply B for
  // balanced imports. A vertex may forward only B - D(v); whatever the
  // demand pass later routes through v's subtree still fits next to it on a
  // shared arc, and the held-back residue is what that pass cancels.
  const Units total = demand_sums[in_tree.root];
  std::vector<Units> supply = initial_supplies(net);

  const bool snapshots = trace && trace->capture_descendant_sums && out_tree;
  std::vector<Units> processed_below;  // per vertex: residual supply on processed descendants
  if (snapshots) processed_below.assign(supply.size(), 0);

  for (const Vertex v : in_tree.order) {
    const std::size_t arc = in_tree.parent_arc[static_cast<std::size_t>(v)];
    const Units before = supply[static_cast<std::size_t>(v)];
    const Units moved = std::min(before, total - demand_sums[v]);
    assert(moved >= 0);
    flow[arc] += moved;
    supply[static_cast<std::size_t>(in_tree.parent(v))] += moved;
    supply[static_cast<std::size_t>(v)] -= moved;
    if (trace) {
      trace->supply_events.push_back({v, before, moved, before - moved});
      trace->supply_increase[arc] += moved;
    }
    if (snapshots) {
      // v's residual is now frozen: later events only touch vertices that
      // come after v in the leaf-to-root order. Credit it to every out-tree
      // ancestor, then snapshot.
      const Units residue = supply[static_cast<std::size_t>(v)];
      Vertex x = v;
      for (;;) {
        processed_below[static_cast<std::size_t>(x)] += residue;
        if (x == out_tree->root) break;
        x = out_tree->parent(x);
      }
      trace->descendant_sum_snapshots.push_back(processed_below);
    }
  }
  return supply;
}

void route_demands_cancel(const Network& net, const RootedTree& out_tree,
                          const std::vector<Units>& residual_supply,
                          std::vector<Units>& flow, RoutingTrace* trace) {
  check_flow_size(net, flow);
  if (residual_supply.size() != static_cast<std::size_t>(net.vertex_count()) + 1)
    throw LengthMismatch(residual_supply.size(),
                         static_cast<std::size_t>(net.vertex_count()) + 1);
  reset_demand_fields(trace, net.arc_count());
  std::vector<Units> demand = initial_demands(net);
  for (std::size_t v = 1; v < demand.size(); ++v) demand[v] -= residual_supply[v];

  for (const Vertex w : out_tree.order) {
    const Units moved = demand[static_cast<std::size_t>(w)];
    if (moved < 0) throw NegativeDemandAtProcessing(w, moved);
    const std::size_t arc = out_tree.parent_arc[static_cast<std::size_t>(w)];
    flow[arc] += moved;
    demand[static_cast<std::size_t>(out_tree.parent(w))] += moved;
    if (trace) {
      trace->demand_events.push_back({w, moved});
      trace->demand_increase[arc] += moved;
    }
  }
  // All nonroot balances are now met and the root nets out to zero.
  assert(demand[static_cast<std::size_t>(out_tree.root)] == 0);
}

Flow feasible_flow(const Network& net, Vertex root, RoutingTrace* trace) {
  if (!trace) return solve_untraced(net, root, true);

  const Units supply_bound = total_supply(net);
  // Spanning both trees is exactly strong connectivity, so build_trees
  // doubles as the connectivity check; capacities are judged after it.
  const TreePair trees = build_trees(net, root);
  std::size_t tightest = 0;
  const Units least = min_capacity_arc(net, tightest);
  if (net.arc_count() && least < supply_bound)
    throw CapacityTooSmall(tightest, least, supply_bound);

  const DemandSums sums = compute_demand_sums(net, trees.out_tree);
  Flow flow{std::vector<Units>(net.arc_count(), 0)};
  const std::vector<Units> residual =
      route_supplies_capped(net, trees.in_tree, sums, flow.values, trace, &trees.out_tree);
  route_demands_cancel(net, trees.out_tree, residual, flow.values, trace);
  return flow;
}

Flow feasible_flow_2b(const Network& net, Vertex root, RoutingTrace* trace) {
  if (!trace) return solve_untraced(net, root, false);

  const Units supply_bound = total_supply(net);
  const TreePair trees = build_trees(net, root);
  if (supply_bound > max_magnitude / 2)
    throw RangeError("required capacity 2B exceeds the representable bound");
  std::size_t tightest = 0;
  const Units least = min_capacity_arc(net, tightest);
  if (net.arc_count() && least < 2 * supply_bound)
    throw CapacityTooSmall(tightest, least, 2 * supply_bound);

  Flow flow{std::vector<Units>(net.arc_count(), 0)};
  route_supplies(net, trees.in_tree, flow.values, trace);
  route_demands(net, trees.out_tree, flow.values, trace);
  return flow;
}

bool tree_uses_arc(const Network& net, const RootedTree& tree, std::size_t arc) {
  const Arc& a = net.arcs()[arc];
  const Vertex child = tree.kind == TreeKind::in_tree ? a.tail : a.head;
  return tree.parent_arc[static_cast<std::size_t>(child)] == arc;
}

}  // namespace feasflow
