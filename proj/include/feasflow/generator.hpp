#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "feasflow/network.hpp"

namespace feasflow {

enum class CapacityMode {
  exact_b,      // every capacity exactly B: the tightest instance the solver accepts
  at_least_b,   // uniform in [B, 2B]
  at_least_2b,  // uniform in [2B, 4B]
  below_b,      // uniform in [0, B-1]: rejected by the solver, oracle-only territory
};

// Parameters for one generated network. Generation is a pure function of
// this record: the same spec always yields the same network.
struct GenSpec {
  Vertex vertex_count = 1;
  std::size_t extra_arcs = 0;  // arcs beyond the spanning cycle
  Units total_supply = 0;
  CapacityMode capacity_mode = CapacityMode::exact_b;
  Vertex supply_spread = 1;  // vertices sharing the supply (shares may be zero)
  Vertex demand_spread = 1;
  std::uint64_t seed = 0;
};

// Strongly connected by construction: a cycle through a random permutation
// of all vertices, plus `extra_arcs` uniformly random arcs (self-loops and
// parallels allowed). The supply is split across supply_spread vertices and
// the demand across demand_spread vertices; the two sets are kept disjoint
// whenever the spreads fit side by side, otherwise they may overlap and the
// contributions sum.
//
// Randomness comes from the mt19937_64 stream for `seed`, consumed in a
// fixed order (permutation, extra arcs, capacities, supply set, supply
// shares, demand set, demand shares) with rejection-sampled bounded draws,
// so corpora regenerate identically within a build of this library.
// Throws SpecInvalid on bad parameters.
Network generate(const GenSpec& spec);

// Directed cycle on 2k vertices with capacities exactly B, supply B at
// vertex 2 and demand B at the antipodal vertex. Routing from the default
// root forces a long overlap between the two spanning trees, so the plain
// two-pass routing would need 2B on many arcs while the capped variant fits.
Network deep_chain(Vertex half_length, Units total_supply);

struct NamedNetwork {
  std::string name;
  Network net;
};

// Hard-coded adversarial fixtures with capacities exactly equal to the total
// supply: "shared-arc-tight" (3-cycle, unit supply two hops past the root),
// "two-cycle-unit" (forced unique flow) and "deep-chain" (deep_chain(3, 5)).
std::vector<NamedNetwork> tight_fixtures();

}  // namespace feasflow
