#pragma once

#include <cstdint>

namespace patrep {

/// Enumeration caps and worker count shared by every computation.
struct Limits {
  std::uint64_t sweep_cap = std::uint64_t{1} << 24;   // q^dim for full sweeps
  std::uint64_t orbit_cap = std::uint64_t{1} << 20;   // single-orbit BFS
  std::uint64_t group_cap = std::uint64_t{1} << 16;   // |G| for characters and oracles
  std::uint64_t search_cap = std::uint64_t{1} << 20;  // candidate subspaces per search
  unsigned threads = 1;
};

}  // namespace patrep
