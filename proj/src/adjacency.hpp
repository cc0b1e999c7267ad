#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "feasflow/network.hpp"
#include "memory.hpp"

namespace feasflow::detail {

// Compact adjacency: per-vertex groups of (neighbor, arc id), contiguous and
// in ascending arc order, so traversals that scan a group visit arcs by
// ascending index and never touch the arc array itself. 32-bit entries keep
// the working set small on million-arc graphs.
struct Csr {
  struct Entry {
    std::uint32_t neighbor;
    std::uint32_t arc;
  };

  std::vector<std::uint32_t> offsets;  // size n + 2; group of v is [offsets[v], offsets[v + 1])
  raw_vector<Entry> entries;
};

// Stable counting sort by the key vertex. The cursor and entry targets are
// fetched a couple of dozen arcs ahead; the scatter is the only random write
// in the build.
inline void build_by_counting(const Network& net, bool key_is_tail, Csr& csr) {
  const std::vector<Arc>& arcs = net.arcs();
  const std::size_t m = arcs.size();
  const auto key_of = [&](const Arc& a) {
    return static_cast<std::size_t>(key_is_tail ? a.tail : a.head);
  };
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 24 < m) __builtin_prefetch(&csr.offsets[key_of(arcs[i + 24]) + 1], 1);
    ++csr.offsets[key_of(arcs[i]) + 1];
  }
  for (std::size_t v = 1; v + 1 < csr.offsets.size(); ++v) csr.offsets[v + 1] += csr.offsets[v];
  std::vector<std::uint32_t> cursor(csr.offsets.begin(), csr.offsets.end() - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 24 < m) __builtin_prefetch(&cursor[key_of(arcs[i + 24])], 1);
    if (i + 12 < m) __builtin_prefetch(&csr.entries[cursor[key_of(arcs[i + 12])]], 1);
    const Arc& a = arcs[i];
    const Vertex neighbor = key_is_tail ? a.head : a.tail;
    csr.entries[cursor[key_of(a)]++] = {static_cast<std::uint32_t>(neighbor),
                                        static_cast<std::uint32_t>(i)};
  }
}

inline Csr csr_by_key(const Network& net, bool key_is_tail) {
  if (net.arc_count() > std::numeric_limits<std::uint32_t>::max())
    throw RangeError("arc count exceeds the adjacency index range");
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  Csr csr;
  csr.offsets.assign(n + 2, 0);
  csr.entries.resize(net.arc_count());
  build_by_counting(net, key_is_tail, csr);
  return csr;
}

// Out-arcs of each vertex, neighbor = head.
inline Csr forward_csr(const Network& net) { return csr_by_key(net, true); }

// In-arcs of each vertex, neighbor = tail.
inline Csr reverse_csr(const Network& net) { return csr_by_key(net, false); }

// Both adjacencies plus the tightest arc, sharing one scan of the wide arc
// array; the scatters then work off a compact endpoint copy. This is what
// the solver uses, so the arc array is streamed once instead of five times.
struct Adjacency {
  Csr forward;
  Csr reverse;
  std::size_t min_capacity_arc = 0;  // meaningless when there are no arcs
  Units min_capacity = 0;
};

inline Adjacency build_adjacency(const Network& net) {
  if (net.arc_count() > std::numeric_limits<std::uint32_t>::max())
    throw RangeError("arc count exceeds the adjacency index range");
  const std::size_t n = static_cast<std::size_t>(net.vertex_count());
  const std::vector<Arc>& arcs = net.arcs();
  const std::size_t m = arcs.size();

  Adjacency adj;
  adj.forward.offsets.assign(n + 2, 0);
  adj.reverse.offsets.assign(n + 2, 0);
  adj.forward.entries.resize(m);
  adj.reverse.entries.resize(m);

  struct Ends {
    std::uint32_t tail;
    std::uint32_t head;
  };
  raw_vector<Ends> ends(m);
  Units least = max_magnitude;
  for (std::size_t i = 0; i < m; ++i) {
    const Arc& a = arcs[i];
    ends[i] = {static_cast<std::uint32_t>(a.tail), static_cast<std::uint32_t>(a.head)};
    ++adj.forward.offsets[static_cast<std::size_t>(a.tail) + 1];
    ++adj.reverse.offsets[static_cast<std::size_t>(a.head) + 1];
    if (a.capacity < least) {
      least = a.capacity;
      adj.min_capacity_arc = i;
    }
  }
  adj.min_capacity = m ? least : 0;
  for (std::size_t v = 1; v + 1 < adj.forward.offsets.size(); ++v) {
    adj.forward.offsets[v + 1] += adj.forward.offsets[v];
    adj.reverse.offsets[v + 1] += adj.reverse.offsets[v];
  }
  std::vector<std::uint32_t> fwd_cursor(adj.forward.offsets.begin(),
                                        adj.forward.offsets.end() - 1);
  std::vector<std::uint32_t> rev_cursor(adj.reverse.offsets.begin(),
                                        adj.reverse.offsets.end() - 1);
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 24 < m) {
      __builtin_prefetch(&fwd_cursor[ends[i + 24].tail], 1);
      __builtin_prefetch(&rev_cursor[ends[i + 24].head], 1);
    }
    if (i + 12 < m) {
      __builtin_prefetch(&adj.forward.entries[fwd_cursor[ends[i + 12].tail]], 1);
      __builtin_prefetch(&adj.reverse.entries[rev_cursor[ends[i + 12].head]], 1);
    }
    const std::uint32_t arc = static_cast<std::uint32_t>(i);
    adj.forward.entries[fwd_cursor[ends[i].tail]++] = {ends[i].head, arc};
    adj.reverse.entries[rev_cursor[ends[i].head]++] = {ends[i].tail, arc};
  }
  return adj;
}

}  // namespace feasflow::detail
