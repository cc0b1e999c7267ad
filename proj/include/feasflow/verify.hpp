#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "feasflow/network.hpp"

namespace feasflow {

// Exact per-vertex balances and per-arc violations for a candidate flow.
// The balance at v is import(v) + inflow - outflow; the flow is feasible iff
// every balance is zero and every value sits in [0, capacity].
struct VerifyReport {
  struct CapacityViolation {
    std::size_t arc;  // 0-based
    Units flow;
    Units capacity;
  };
  struct NegativityViolation {
    std::size_t arc;
    Units flow;
  };

  std::vector<Units> balances;  // size n + 1, slot 0 unused
  std::vector<CapacityViolation> capacity_violations;
  std::vector<NegativityViolation> negativity_violations;
  bool feasible = false;
};

// Single source of truth for feasibility. Accumulates balances in 128-bit
// arithmetic so arbitrary in-range flow files cannot overflow; throws
// LengthMismatch on a wrong-sized flow, RangeError if a balance leaves the
// 64-bit range.
VerifyReport verify_flow(const Network& net, const Flow& flow);

struct OracleResult {
  bool feasible = false;
  std::optional<Flow> witness;  // present iff feasible; passes verify_flow
};

// Independent feasibility oracle: reduces to a maximum flow from a super
// source (arcs of capacity b(v) to each supply vertex) to a super sink (arcs
// of capacity -b(v) from each demand vertex) and augments along shortest
// paths. Feasible iff the max-flow value equals the total supply. Built for
// trust, not speed; keep oracle instances small. Throws ImportImbalance.
OracleResult oracle_feasible(const Network& net);

struct CrossCheckReport {
  Flow flow;            // solver output
  VerifyReport report;  // verifier's view of that output
  bool oracle_feasible = false;
  bool agree = false;   // always true on return; disagreement throws
};

// Runs the solver, the verifier and the oracle on one network and demands
// unanimity: the solver's flow must verify and the oracle must report
// feasible. Propagates the solver's precondition errors; throws Disagreement
// if the checks conflict.
CrossCheckReport cross_check(const Network& net);

}  // namespace feasflow
