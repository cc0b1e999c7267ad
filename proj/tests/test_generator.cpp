#include <random>

#include "doctest.h"
#include "feasflow/generator.hpp"
#include "feasflow/io.hpp"
#include "feasflow/tree_routing.hpp"
#include "feasflow/verify.hpp"
#include "helpers.hpp"

using namespace feasflow;

TEST_CASE("degenerate single-vertex spec") {
  GenSpec spec;
  spec.vertex_count = 1;
  spec.extra_arcs = 2;
  spec.total_supply = 0;
  spec.seed = 9;
  const Network net = generate(spec);
  CHECK(net.vertex_count() == 1);
  CHECK(net.arc_count() == 3);  // the cycle degenerates to a self-loop
  for (const Arc& a : net.arcs()) {
    CHECK(a.tail == 1);
    CHECK(a.head == 1);
  }
  CHECK(net.import(1) == 0);
  CHECK(is_strongly_connected(net));
}

TEST_CASE("three-vertex tight spec is structurally the shared-arc case") {
  GenSpec spec;
  spec.vertex_count = 3;
  spec.extra_arcs = 0;
  spec.total_supply = 1;
  spec.capacity_mode = CapacityMode::exact_b;
  spec.supply_spread = 1;
  spec.demand_spread = 1;
  spec.seed = 1234;
  const Network net = generate(spec);
  CHECK(net.arc_count() == 3);
  CHECK(is_strongly_connected(net));
  CHECK(total_supply(net) == 1);
  for (const Arc& a : net.arcs()) CHECK(a.capacity == 1);
  CHECK(verify_flow(net, feasible_flow(net)).feasible);
}

TEST_CASE("generation is a pure function of the spec") {
  GenSpec spec;
  spec.vertex_count = 17;
  spec.extra_arcs = 23;
  spec.total_supply = 99;
  spec.capacity_mode = CapacityMode::at_least_b;
  spec.supply_spread = 4;
  spec.demand_spread = 6;
  spec.seed = 0xfeedbeef;
  CHECK(serialize_network(generate(spec)) == serialize_network(generate(spec)));
  CHECK(generate(spec) == generate(spec));
}

TEST_CASE("generated networks honor their capacity mode") {
  std::mt19937_64 rng(6401);
  const CapacityMode modes[] = {CapacityMode::exact_b, CapacityMode::at_least_b,
                                CapacityMode::at_least_2b, CapacityMode::below_b};
  for (int i = 0; i < 60; ++i) {
    const GenSpec spec =
        testutil::random_spec(rng, 2, 40, 50, 500, modes[i % 4]);
    const Network net = generate(spec);
    CHECK(is_strongly_connected(net));
    CHECK(total_supply(net) == spec.total_supply);
    CHECK(net.arc_count() == static_cast<std::size_t>(spec.vertex_count) + spec.extra_arcs);
    for (const Arc& a : net.arcs()) {
      switch (spec.capacity_mode) {
        case CapacityMode::exact_b:
          CHECK(a.capacity == spec.total_supply);
          break;
        case CapacityMode::at_least_b:
          CHECK(a.capacity >= spec.total_supply);
          CHECK(a.capacity <= 2 * spec.total_supply);
          break;
        case CapacityMode::at_least_2b:
          CHECK(a.capacity >= 2 * spec.total_supply);
          CHECK(a.capacity <= 4 * spec.total_supply);
          break;
        case CapacityMode::below_b:
          CHECK(a.capacity < spec.total_supply);
          break;
      }
    }
  }
}

TEST_CASE("generator rejects invalid specs") {
  GenSpec spec;
  spec.vertex_count = 0;
  CHECK_THROWS_AS(generate(spec), SpecInvalid);

  spec = GenSpec{};
  spec.vertex_count = 3;
  spec.total_supply = -1;
  CHECK_THROWS_AS(generate(spec), SpecInvalid);

  spec = GenSpec{};
  spec.vertex_count = 3;
  spec.total_supply = 5;
  spec.supply_spread = 4;  // more than n
  CHECK_THROWS_AS(generate(spec), SpecInvalid);

  spec = GenSpec{};
  spec.vertex_count = 3;
  spec.total_supply = 5;
  spec.supply_spread = 0;  // positive supply needs somewhere to sit
  CHECK_THROWS_AS(generate(spec), SpecInvalid);

  spec = GenSpec{};
  spec.vertex_count = 3;
  spec.total_supply = 0;
  spec.capacity_mode = CapacityMode::below_b;  // nothing lies below zero
  CHECK_THROWS_AS(generate(spec), SpecInvalid);
}

TEST_CASE("deep chains put the supply and demand at antipodes") {
  const Network chain = deep_chain(3, 5);
  CHECK(chain.vertex_count() == 6);
  CHECK(chain.arc_count() == 6);
  CHECK(chain.import(2) == 5);
  CHECK(chain.import(5) == -5);
  CHECK(is_strongly_connected(chain));
  for (const Arc& a : chain.arcs()) CHECK(a.capacity == 5);

  const Network tiny = deep_chain(1, 2);
  CHECK(tiny.vertex_count() == 2);
  CHECK(tiny.import(2) == 2);
  CHECK(tiny.import(1) == -2);
}

TEST_CASE("tight fixtures behave as advertised") {
  const auto fixtures = tight_fixtures();
  REQUIRE(fixtures.size() == 3);

  CHECK(fixtures[0].name == "shared-arc-tight");
  CHECK(fixtures[0].net ==
        Network(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}, {0, 0, 1, -1}));
  CHECK(feasible_flow(fixtures[0].net).values == std::vector<Units>{0, 1, 0});

  CHECK(fixtures[1].name == "two-cycle-unit");
  CHECK(feasible_flow(fixtures[1].net).values == std::vector<Units>{1, 0});

  CHECK(fixtures[2].name == "deep-chain");
  for (const auto& [name, net] : fixtures) {
    CAPTURE(name);
    const CrossCheckReport record = cross_check(net);
    CHECK(record.agree);
    // Tight capacities: the plain two-pass solver must refuse them.
    CHECK_THROWS_AS(feasible_flow_2b(net), CapacityTooSmall);
  }
}

TEST_CASE("the plain two passes overshoot a shared arc on the tight fixtures") {
  // Both fixtures with a tree-shared arc; the two-cycle has none and the
  // plain passes get through it unharmed.
  const auto fixtures = tight_fixtures();
  for (const auto& [name, net] : {fixtures[0], fixtures[2]}) {
    CAPTURE(name);
    const Units supply_bound = total_supply(net);
    const TreePair trees = build_trees(net, 1);
    std::vector<Units> flow(net.arc_count(), 0);
    RoutingTrace trace;
    route_supplies(net, trees.in_tree, flow, &trace);
    route_demands(net, trees.out_tree, flow, &trace);

    bool overshoot = false;
    for (std::size_t a = 0; a < net.arc_count(); ++a) {
      if (tree_uses_arc(net, trees.in_tree, a) && tree_uses_arc(net, trees.out_tree, a) &&
          trace.supply_increase[a] + trace.demand_increase[a] == 2 * supply_bound) {
        CHECK(flow[a] > net.arcs()[a].capacity);
        overshoot = true;
      }
    }
    CHECK(overshoot);
  }
}
