#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patrep/induce.hpp"
#include "patrep/limits.hpp"
#include "patrep/pattern.hpp"
#include "patrep/polarize.hpp"

namespace patrep {

/// A size-q^2 orbit with the representative Y and codimension-one pattern
/// subalgebra b = D \ {removed} used to induce its character.
struct Q2Representative {
  Functional orbit_min;     // least element of the orbit
  Functional y;
  Root removed{};
  Subalgebra b;
  std::size_t options = 0;  // valid (removed, Y) choices in the orbit
  std::optional<std::pair<Root, Functional>> alternative;  // another valid choice
};

/// One entry per coadjoint orbit of size q^2, in orbit order. Throws
/// ProofCaseViolation when no element of such an orbit fits either case.
std::vector<Q2Representative> q2_orbit_representatives(const PatternGroup& G, const Limits& limits = {});

struct DegqEntry {
  Q2Representative rep;
  Character character;
  std::int64_t degree = 0;
  std::int64_t norm = 0;
  bool choice_independent = true;  // equal character from the alternative
};

struct DegqReport {
  std::vector<DegqEntry> entries;
  std::uint64_t census_count = 0;
  std::uint64_t oracle_m1 = 0;
  bool all_degree_q = false;
  bool all_irreducible = false;
  bool pairwise_distinct = false;
  bool choice_independent = false;
  bool pass() const {
    return all_degree_q && all_irreducible && pairwise_distinct && choice_independent && census_count == oracle_m1;
  }
};

/// Induces a degree-q character from every q^2-orbit and compares the count
/// with the commutator-moment multiplicity m_1.
DegqReport degq_census(const PatternGroup& G, const Limits& limits = {});

}  // namespace patrep
