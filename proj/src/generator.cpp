#include "feasflow/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace feasflow {

namespace {

// Uniform draw from [0, bound) by rejection, so the result depends only on
// the engine stream and not on a library's distribution implementation.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (-bound) % bound;  // 2^64 mod bound
  std::uint64_t draw = rng();
  while (draw < threshold) draw = rng();
  return draw % bound;
}

Units uniform_units(std::mt19937_64& rng, Units lo, Units hi) {  // inclusive
  return lo + static_cast<Units>(bounded(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<Vertex> shuffled_vertices(std::mt19937_64& rng, Vertex n) {
  std::vector<Vertex> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), Vertex{1});
  for (std::size_t i = perm.size(); i > 1; --i)
    std::swap(perm[i - 1], perm[bounded(rng, i)]);
  return perm;
}

// Splits total into exactly `parts` nonnegative shares: parts - 1 sorted cut
// points over [0, total], then the gaps.
std::vector<Units> split_total(std::mt19937_64& rng, Units total, Vertex parts) {
  std::vector<Units> cuts(static_cast<std::size_t>(parts) - 1);
  for (Units& c : cuts) c = uniform_units(rng, 0, total);
  std::sort(cuts.begin(), cuts.end());
  std::vector<Units> shares;
  shares.reserve(static_cast<std::size_t>(parts));
  Units previous = 0;
  for (const Units c : cuts) {
    shares.push_back(c - previous);
    previous = c;
  }
  shares.push_back(total - previous);
  return shares;
}

void validate(const GenSpec& spec) {
  if (spec.vertex_count < 1) throw SpecInvalid("vertex count must be positive");
  if (spec.extra_arcs > 100'000'000) throw SpecInvalid("extra arc count out of range");
  if (spec.total_supply < 0) throw SpecInvalid("total supply must be nonnegative");
  if (spec.supply_spread < 0 || spec.supply_spread > spec.vertex_count ||
      spec.demand_spread < 0 || spec.demand_spread > spec.vertex_count)
    throw SpecInvalid("spreads must lie in 0..vertex_count");
  if (spec.total_supply > 0 && (spec.supply_spread < 1 || spec.demand_spread < 1))
    throw SpecInvalid("positive supply needs supply and demand spreads of at least 1");

  const Units b = spec.total_supply;
  switch (spec.capacity_mode) {
    case CapacityMode::exact_b:
      if (b > max_magnitude) throw SpecInvalid("total supply exceeds 2^62");
      break;
    case CapacityMode::at_least_b:
      if (b > max_magnitude / 2) throw SpecInvalid("capacity range 2B exceeds 2^62");
      break;
    case CapacityMode::at_least_2b:
      if (b > max_magnitude / 4) throw SpecInvalid("capacity range 4B exceeds 2^62");
      break;
    case CapacityMode::below_b:
      if (b == 0) throw SpecInvalid("below-B capacities need a positive total supply");
      if (b > max_magnitude) throw SpecInvalid("total supply exceeds 2^62");
      break;
  }
}

Units draw_capacity(std::mt19937_64& rng, CapacityMode mode, Units b) {
  switch (mode) {
    case CapacityMode::exact_b: return b;
    case CapacityMode::at_least_b: return uniform_units(rng, b, 2 * b);
    case CapacityMode::at_least_2b: return uniform_units(rng, 2 * b, 4 * b);
    case CapacityMode::below_b: return uniform_units(rng, 0, b - 1);
  }
  throw SpecInvalid("unknown capacity mode");
}

}  // namespace

Network generate(const GenSpec& spec) {
  validate(spec);
  const Vertex n = spec.vertex_count;
  std::mt19937_64 rng(spec.seed);

  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) + spec.extra_arcs);
  const std::vector<Vertex> cycle = shuffled_vertices(rng, n);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    arcs.push_back({cycle[i], cycle[(i + 1) % cycle.size()], 0});
  for (std::size_t i = 0; i < spec.extra_arcs; ++i) {
    const Vertex tail = static_cast<Vertex>(1 + bounded(rng, static_cast<std::uint64_t>(n)));
    const Vertex head = static_cast<Vertex>(1 + bounded(rng, static_cast<std::uint64_t>(n)));
    arcs.push_back({tail, head, 0});
  }
  for (Arc& a : arcs) a.capacity = draw_capacity(rng, spec.capacity_mode, spec.total_supply);

  std::vector<Units> imports(static_cast<std::size_t>(n) + 1, 0);
  if (spec.total_supply > 0) {
    const std::vector<Vertex> slots = shuffled_vertices(rng, n);
    const auto k_supply = static_cast<std::size_t>(spec.supply_spread);
    const auto k_demand = static_cast<std::size_t>(spec.demand_spread);
    std::vector<Vertex> demand_slots;
    if (k_supply + k_demand <= static_cast<std::size_t>(n)) {
      demand_slots.assign(slots.begin() + k_supply, slots.begin() + k_supply + k_demand);
    } else {
      const std::vector<Vertex> reshuffle = shuffled_vertices(rng, n);
      demand_slots.assign(reshuffle.begin(), reshuffle.begin() + k_demand);
    }
    const std::vector<Units> supply_shares = split_total(rng, spec.total_supply, spec.supply_spread);
    const std::vector<Units> demand_shares = split_total(rng, spec.total_supply, spec.demand_spread);
    for (std::size_t i = 0; i < k_supply; ++i)
      imports[static_cast<std::size_t>(slots[i])] += supply_shares[i];
    for (std::size_t i = 0; i < k_demand; ++i)
      imports[static_cast<std::size_t>(demand_slots[i])] -= demand_shares[i];
  }

  return Network(n, std::move(arcs), std::move(imports));
}

Network deep_chain(Vertex half_length, Units total_supply) {
  if (half_length < 1) throw SpecInvalid("half length must be positive");
  if (total_supply < 0 || total_supply > max_magnitude)
    throw SpecInvalid("total supply out of range");
  const Vertex n = 2 * half_length;
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 1; v < n; ++v) arcs.push_back({v, v + 1, total_supply});
  arcs.push_back({n, 1, total_supply});
  std::vector<Units> imports(static_cast<std::size_t>(n) + 1, 0);
  const Vertex supply_at = std::min<Vertex>(2, n);
  const Vertex demand_at = static_cast<Vertex>((supply_at - 1 + half_length) % n + 1);
  imports[static_cast<std::size_t>(supply_at)] += total_supply;
  imports[static_cast<std::size_t>(demand_at)] -= total_supply;
  return Network(n, std::move(arcs), std::move(imports));
}

std::vector<NamedNetwork> tight_fixtures() {
  std::vector<NamedNetwork> fixtures;
  fixtures.push_back({"shared-arc-tight",
                      Network(3, {{1, 2, 1}, {2, 3, 1}, {3, 1, 1}}, {0, 0, 1, -1})});
  fixtures.push_back({"two-cycle-unit", Network(2, {{1, 2, 1}, {2, 1, 1}}, {0, 1, -1})});
  fixtures.push_back({"deep-chain", deep_chain(3, 5)});
  return fixtures;
}

}  // namespace feasflow
