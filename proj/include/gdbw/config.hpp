#pragma once

#include <cstdint>

namespace gdbw {

// Cap on the candidate space (k^n words, DFS states, ...) of exhaustive
// routines. Exceeding it raises BoundExceeded rather than hanging.
inline constexpr std::uint64_t kDefaultEnumerationBound = std::uint64_t{1} << 24;

// Smallest bound the CLI accepts.
inline constexpr std::uint64_t kMinEnumerationBound = std::uint64_t{1} << 10;

// Brute-force Eulerian cycle walks are kept behind this edge-count guard.
inline constexpr int kMaxEulerianBruteForceEdges = 16;

}  // namespace gdbw
