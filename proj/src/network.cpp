#include "feasflow/network.hpp"

#include <algorithm>
#include <utility>

#include "adjacency.hpp"

namespace feasflow {

Network::Network(Vertex vertex_count, std::vector<Arc> arcs, std::vector<Units> imports)
    : vertex_count_(vertex_count), arcs_(std::move(arcs)), imports_(std::move(imports)) {
  if (vertex_count_ < 1) throw RangeError("vertex count must be positive");
  if (imports_.size() != static_cast<std::size_t>(vertex_count_) + 1)
    throw RangeError("imports must have vertex_count + 1 entries (slot 0 unused)");
  if (imports_[0] != 0) throw RangeError("imports slot 0 must be zero");

  __int128 supply = 0;
  __int128 demand = 0;
  for (Vertex v = 1; v <= vertex_count_; ++v) {
    const Units b = imports_[static_cast<std::size_t>(v)];
    if (b > max_magnitude || b < -max_magnitude)
      throw RangeError("import magnitude exceeds 2^62 at vertex " + std::to_string(v));
    if (b > 0) supply += b; else demand -= b;
  }
  if (supply > max_magnitude) throw RangeError("total supply exceeds 2^62");
  if (demand > max_magnitude) throw RangeError("total demand exceeds 2^62");

  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    if (a.tail < 1 || a.tail > vertex_count_ || a.head < 1 || a.head > vertex_count_)
      throw RangeError("arc " + std::to_string(i + 1) + " endpoint out of 1.." +
                       std::to_string(vertex_count_));
    if (a.capacity < 0)
      throw RangeError("arc " + std::to_string(i + 1) + " has negative capacity");
    if (a.capacity > max_magnitude)
      throw RangeError("arc " + std::to_string(i + 1) + " capacity exceeds 2^62");
  }
}

Units total_supply(const Network& net) {
  // Per-vertex bounds checked at construction keep both running sums exact.
  Units residual = 0;
  Units supply = 0;
  for (Vertex v = 1; v <= net.vertex_count(); ++v) {
    const Units b = net.import(v);
    residual += b;
    supply += std::max<Units>(b, 0);
  }
  if (residual != 0) throw ImportImbalance(residual);
  return supply;
}

namespace {

bool spans_all(const Network& net, const detail::Csr& csr, Vertex start) {
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  std::vector<std::uint64_t> seen((n + 64) / 64, 0);
  const auto test_and_set = [&](std::size_t v) {
    std::uint64_t& word = seen[v >> 6];
    const std::uint64_t bit = std::uint64_t{1} << (v & 63);
    const bool was = word & bit;
    word |= bit;
    return was;
  };
  std::vector<Vertex> queue;
  queue.reserve(n);
  test_and_set(static_cast<std::size_t>(start));
  queue.push_back(start);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    const auto v = static_cast<std::size_t>(queue[qi]);
    for (std::size_t i = csr.offsets[v]; i < csr.offsets[v + 1]; ++i) {
      const Vertex to = static_cast<Vertex>(csr.entries[i].neighbor);
      if (!test_and_set(static_cast<std::size_t>(to))) queue.push_back(to);
    }
  }
  return queue.size() == n;
}

}  // namespace

bool is_strongly_connected(const Network& net) {
  if (net.vertex_count() == 1) return true;
  return spans_all(net, detail::forward_csr(net), 1) &&
         spans_all(net, detail::reverse_csr(net), 1);
}

Network reverse(const Network& net) {
  std::vector<Arc> arcs;
  arcs.reserve(net.arc_count());
  for (const Arc& a : net.arcs()) arcs.push_back({a.head, a.tail, a.capacity});
  return Network(net.vertex_count(), std::move(arcs), net.imports());
}

}  // namespace feasflow
