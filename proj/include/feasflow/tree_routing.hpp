#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "feasflow/network.hpp"

namespace feasflow {

enum class TreeKind { in_tree, out_tree };

// Parent-link spanning tree rooted at `root`. For an in-tree the parent arc
// of v runs (v, parent(v)); for an out-tree it runs (parent(v), v). `order`
// lists the nonroot vertices leaf-to-root: every vertex precedes its parent.
// parent_vertex caches the parent endpoint of each parent arc so traversals
// stay off the arc array.
struct RootedTree {
  static constexpr std::size_t no_arc = std::numeric_limits<std::size_t>::max();

  Vertex root = 0;
  TreeKind kind = TreeKind::out_tree;
  std::vector<std::size_t> parent_arc;    // size n + 1; no_arc at the root
  std::vector<Vertex> parent_vertex;      // size n + 1; 0 at the root
  std::vector<Vertex> order;

  Vertex parent(Vertex v) const { return parent_vertex[static_cast<std::size_t>(v)]; }
};

struct TreePair {
  RootedTree in_tree;
  RootedTree out_tree;
};

// Demand sums over the out-tree: values[v] is the total demand of the
// descendants of v, v included. values[root] equals the total supply when
// the imports balance.
struct DemandSums {
  std::vector<Units> values;  // size n + 1

  Units operator[](Vertex v) const { return values[static_cast<std::size_t>(v)]; }
};

// Optional instrumentation filled by the routing passes. Each pass resets
// the fields it owns on entry (supply passes the supply fields and the
// snapshots, demand passes the demand fields); events are recorded in
// processing order.
struct RoutingTrace {
  struct SupplyEvent {
    Vertex vertex;
    Units supply_before;
    Units transferred;
    Units supply_after;
  };
  struct DemandEvent {
    Vertex vertex;
    Units demand;  // net demand at processing time; nonnegative on valid runs
  };

  std::vector<SupplyEvent> supply_events;
  std::vector<DemandEvent> demand_events;
  std::vector<Units> supply_increase;  // per arc, from the supply pass
  std::vector<Units> demand_increase;  // per arc, from the demand pass

  // When set before the run, the capped supply pass records after every
  // event, for every vertex x, the total residual supply currently sitting
  // on already-processed out-tree descendants of x (x included). O(n) time
  // and space per event; meant for small instrumented runs.
  bool capture_descendant_sums = false;
  std::vector<std::vector<Units>> descendant_sum_snapshots;  // one (n+1)-vector per supply event
};

// Builds the two spanning trees rooted at `root`: the out-tree by a
// breadth-first search on the network, the in-tree by a breadth-first search
// on the reversed network. Neighbor exploration follows ascending arc index,
// so the trees are deterministic; `order` is the reversed discovery order.
// Throws NotStronglyConnected if either search fails to span all vertices,
// RangeError if root is not in 1..n.
TreePair build_trees(const Network& net, Vertex root);

// One pass over order: children accumulate into parents.
DemandSums compute_demand_sums(const Network& net, const RootedTree& out_tree);

// Supply pass, full transfer: each nonroot vertex of the in-tree forwards
// its whole current supply to its parent. Returns the residual supplies,
// which are all zero afterwards except at the root. Per-arc increase is at
// most the total supply.
std::vector<Units> route_supplies(const Network& net, const RootedTree& in_tree,
                                  std::vector<Units>& flow,
                                  RoutingTrace* trace = nullptr);

// Demand pass, plain: each nonroot vertex of the out-tree adds its current
// demand to its parent arc's flow and to its parent's demand.
void route_demands(const Network& net, const RootedTree& out_tree,
                   std::vector<Units>& flow, RoutingTrace* trace = nullptr);

// Supply pass, capped: a vertex forwards only up to B - D(v) flow units,
// where B is the total supply and D(v) its demand sum, and keeps the rest as
// residual supply. Residuals end up only on vertices whose demand sum is
// positive. Pass `out_tree` to enable descendant-sum snapshots on an
// instrumented run.
std::vector<Units> route_supplies_capped(const Network& net, const RootedTree& in_tree,
                                         const DemandSums& demand_sums,
                                         std::vector<Units>& flow,
                                         RoutingTrace* trace = nullptr,
                                         const RootedTree* out_tree = nullptr);

// Demand pass with cancellation: starts each vertex at demand minus residual
// supply and routes the nonnegative net demands toward the root. Throws
// NegativeDemandAtProcessing if a vertex comes up negative, which valid
// inputs never produce.
void route_demands_cancel(const Network& net, const RootedTree& out_tree,
                          const std::vector<Units>& residual_supply,
                          std::vector<Units>& flow, RoutingTrace* trace = nullptr);

// Feasible flow on a strongly connected network whose minimum arc capacity
// is at least the total supply B. Runs the capped supply pass and the
// cancelling demand pass over the two spanning trees; O(n + m).
// Throws ImportImbalance, NotStronglyConnected or CapacityTooSmall when the
// preconditions fail.
Flow feasible_flow(const Network& net, Vertex root = 1, RoutingTrace* trace = nullptr);

// The classic two-pass variant: full supply transfer, plain demand pass.
// Needs every arc capacity at least 2B because the two passes may stack up
// to B each on an arc shared by both trees.
Flow feasible_flow_2b(const Network& net, Vertex root = 1, RoutingTrace* trace = nullptr);

// True iff `arc` is one of the tree's parent arcs.
bool tree_uses_arc(const Network& net, const RootedTree& tree, std::size_t arc);

}  // namespace feasflow
