#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patrep/limits.hpp"
#include "patrep/pattern.hpp"
#include "patrep/polarize.hpp"

namespace patrep {

/// Split of D by the last column n = u_rank(D): z holds the roots (i, n),
/// m the rest. G_D = M x| Z with Z abelian and normal.
struct MZSplit {
  int n = 0;
  std::vector<Root> m;
  std::vector<Root> z;
};
MZSplit decompose_MZ(const ClosedRootSet& d);

struct InduciblePair {
  Functional t;           // the representative actually used
  Subalgebra b;
  GroupElement witness;   // Ad*(witness) input = t
};

struct PairVerdict {
  bool ok = false;
  std::vector<std::string> reasons;
};

/// b multiplicatively closed, lambda_T(b^2) = 0, u_rank(b) = u_rank(D).
PairVerdict verify_inducible_pair(const PatternGroup& G, const Functional& t, const Subalgebra& b);

/// Recursive construction over the last column. Throws ConstructionFailed
/// when the assembled pair does not verify.
InduciblePair build_inducible_pair(const PatternGroup& G, const Functional& t);

struct InducibleSweep {
  std::uint64_t tested = 0;
  std::uint64_t findings = 0;
  std::vector<std::string> finding_details;  // first few, verbatim
  bool exhaustive = false;
};

/// Every functional when q^dim <= cap and samples == 0, otherwise `samples`
/// functionals drawn from a seeded generator.
InducibleSweep inducible_sweep(const PatternGroup& G, std::uint64_t samples, std::uint64_t seed,
                               const Limits& limits = {});

}  // namespace patrep
