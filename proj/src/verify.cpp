#include "feasflow/verify.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "feasflow/tree_routing.hpp"

namespace feasflow {

VerifyReport verify_flow(const Network& net, const Flow& flow) {
  if (flow.values.size() != net.arc_count())
    throw LengthMismatch(flow.values.size(), net.arc_count());

  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  std::vector<__int128> balance(n + 1, 0);
  for (Vertex v = 1; v <= net.vertex_count(); ++v)
    balance[static_cast<std::size_t>(v)] = net.import(v);

  VerifyReport report;
  for (std::size_t i = 0; i < net.arc_count(); ++i) {
    const Arc& a = net.arcs()[i];
    const Units f = flow.values[i];
    if (f < 0) report.negativity_violations.push_back({i, f});
    if (f > a.capacity) report.capacity_violations.push_back({i, f, a.capacity});
    balance[static_cast<std::size_t>(a.head)] += f;
    balance[static_cast<std::size_t>(a.tail)] -= f;
  }

  report.balances.assign(n + 1, 0);
  bool balanced = true;
  for (std::size_t v = 1; v <= n; ++v) {
    if (balance[v] > std::numeric_limits<Units>::max() ||
        balance[v] < std::numeric_limits<Units>::min())
      throw RangeError("balance at vertex " + std::to_string(v) +
                       " exceeds the 64-bit range");
    report.balances[v] = static_cast<Units>(balance[v]);
    balanced = balanced && report.balances[v] == 0;
  }
  report.feasible = balanced && report.capacity_violations.empty() &&
                    report.negativity_violations.empty();
  return report;
}

namespace {

// Residual graph with paired arcs: the reverse of arc e is e ^ 1.
struct ResidualGraph {
  struct Edge {
    Vertex to;
    Units residual;
  };

  explicit ResidualGraph(std::size_t nodes) : out(nodes) {}

  std::size_t add(Vertex from, Vertex to, Units capacity) {
    const std::size_t id = edges.size();
    edges.push_back({to, capacity});
    edges.push_back({from, 0});
    out[static_cast<std::size_t>(from)].push_back(id);
    out[static_cast<std::size_t>(to)].push_back(id + 1);
    return id;
  }

  std::vector<Edge> edges;
  std::vector<std::vector<std::size_t>> out;
};

constexpr std::size_t no_edge = std::numeric_limits<std::size_t>::max();

// Shortest augmenting path by BFS; returns false when the sink is unreachable.
bool find_path(const ResidualGraph& g, Vertex source, Vertex sink,
               std::vector<std::size_t>& parent_edge) {
  std::fill(parent_edge.begin(), parent_edge.end(), no_edge);
  std::vector<Vertex> queue;
  queue.push_back(source);
  std::vector<char> seen(g.out.size(), 0);
  seen[static_cast<std::size_t>(source)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const Vertex v = queue[qi];
    for (const std::size_t e : g.out[static_cast<std::size_t>(v)]) {
      const auto& edge = g.edges[e];
      if (edge.residual <= 0 || seen[static_cast<std::size_t>(edge.to)]) continue;
      seen[static_cast<std::size_t>(edge.to)] = 1;
      parent_edge[static_cast<std::size_t>(edge.to)] = e;
      if (edge.to == sink) return true;
      queue.push_back(edge.to);
    }
  }
  return false;
}

}  // namespace

OracleResult oracle_feasible(const Network& net) {
  const Units want = total_supply(net);
  const Vertex n = net.vertex_count();
  const Vertex source = 0;
  const Vertex sink = n + 1;

  ResidualGraph g(static_cast<std::size_t>(n) + 2);
  std::vector<std::size_t> arc_edge(net.arc_count());
  for (std::size_t i = 0; i < net.arc_count(); ++i)
    arc_edge[i] = g.add(net.arcs()[i].tail, net.arcs()[i].head, net.arcs()[i].capacity);
  for (Vertex v = 1; v <= n; ++v) {
    const Units b = net.import(v);
    if (b > 0) g.add(source, v, b);
    if (b < 0) g.add(v, sink, -b);
  }

  Units value = 0;
  std::vector<std::size_t> parent_edge(static_cast<std::size_t>(n) + 2, no_edge);
  while (value < want && find_path(g, source, sink, parent_edge)) {
    Units bottleneck = std::numeric_limits<Units>::max();
    for (Vertex v = sink; v != source;) {
      const auto& edge = g.edges[parent_edge[static_cast<std::size_t>(v)]];
      bottleneck = std::min(bottleneck, edge.residual);
      v = g.edges[parent_edge[static_cast<std::size_t>(v)] ^ 1].to;
    }
    for (Vertex v = sink; v != source;) {
      const std::size_t e = parent_edge[static_cast<std::size_t>(v)];
      g.edges[e].residual -= bottleneck;
      g.edges[e ^ 1].residual += bottleneck;
      v = g.edges[e ^ 1].to;
    }
    value += bottleneck;
  }
  if (value != want) return {false, std::nullopt};

  Flow witness{std::vector<Units>(net.arc_count(), 0)};
  for (std::size_t i = 0; i < net.arc_count(); ++i)
    witness.values[i] = net.arcs()[i].capacity - g.edges[arc_edge[i]].residual;
  return {true, std::move(witness)};
}

CrossCheckReport cross_check(const Network& net) {
  CrossCheckReport record{feasible_flow(net), {}, false, false};
  record.report = verify_flow(net, record.flow);
  record.oracle_feasible = oracle_feasible(net).feasible;
  record.agree = record.report.feasible && record.oracle_feasible;
  if (!record.agree)
    throw Disagreement(std::string("solver flow ") +
                       (record.report.feasible ? "verifies" : "fails verification") +
                       ", oracle says " +
                       (record.oracle_feasible ? "feasible" : "infeasible"));
  return record;
}

}  // namespace feasflow
