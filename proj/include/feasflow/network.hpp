#pragma once

#include <cstddef>
#include <vector>

#include "feasflow/errors.hpp"
#include "feasflow/types.hpp"

namespace feasflow {

// One directed arc. Parallel arcs and self-loops are allowed; an arc is
// identified by its position in Network::arcs().
struct Arc {
  Vertex tail = 0;
  Vertex head = 0;
  Units capacity = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Immutable directed multigraph with integer arc capacities and a signed
// integer import per vertex (positive = supply, negative = demand).
//
// The constructor validates endpoints and ranges: every endpoint in 1..n,
// every capacity in [0, 2^62], every |import| at most 2^62, and the total
// supply and total demand each at most 2^62. It does not require the imports
// to balance; total_supply() checks that where it matters.
class Network {
 public:
  // `imports` must have vertex_count + 1 entries; slot 0 is unused and must
  // be zero, so imports[v] is the import of vertex v.
  Network(Vertex vertex_count, std::vector<Arc> arcs, std::vector<Units> imports);

  Vertex vertex_count() const { return vertex_count_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_count() const { return arcs_.size(); }

  Units import(Vertex v) const { return imports_[static_cast<std::size_t>(v)]; }
  const std::vector<Units>& imports() const { return imports_; }

  friend bool operator==(const Network&, const Network&) = default;

 private:
  Vertex vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<Units> imports_;
};

// Per-arc flow values, indexed like Network::arcs(). A plain record: the
// verifier, not the type, decides whether the values are admissible.
struct Flow {
  std::vector<Units> values;

  friend bool operator==(const Flow&, const Flow&) = default;
};

// Total supply B = sum of the positive imports; equals the total demand when
// the imports balance. Throws ImportImbalance when they do not.
Units total_supply(const Network& net);

// True iff every vertex reaches every other along directed arcs. Implemented
// as breadth-first reachability from vertex 1 in the network and in its
// reverse, O(n + m).
bool is_strongly_connected(const Network& net);

// Network with every arc (u, v, c) replaced by (v, u, c) at the same
// position; imports unchanged. An involution.
Network reverse(const Network& net);

}  // namespace feasflow
