#pragma once

#include <cstdint>

namespace feasflow {

// Vertices are numbered 1..n; 0 is never a valid id.
using Vertex = std::int32_t;

// Flow units: capacities, imports, supplies, flows. All arithmetic is exact.
using Units = std::int64_t;

// Bound on every capacity, every |import|, the total supply and the total
// demand. Keeping inputs at or below 2^62 keeps every value the library
// computes inside a signed 64-bit integer.
inline constexpr Units max_magnitude = Units{1} << 62;

}  // namespace feasflow
