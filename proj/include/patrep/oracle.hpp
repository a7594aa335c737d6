#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patrep/coadjoint.hpp"
#include "patrep/limits.hpp"
#include "patrep/pattern.hpp"

// Brute-force oracles. Inputs are group multiplication and conjugacy classes
// only; nothing here reads orbits, polarizations or induced characters.

namespace patrep {

/// Integer values per conjugacy class.
struct ClassFunctionInt {
  std::string group;
  std::vector<std::int64_t> values;
};

/// f(g) = #{(x, y) : x y x^-1 y^-1 = g}, via
/// f(g) = sum_x |C_G(x)| [x^-1 g in Cl(x^-1)]. Cost |G| * #classes.
ClassFunctionInt commutator_distribution(const PatternGroup& G, const ClassPartition& classes,
                                         const Limits& limits = {});
/// The same function by the |G|^2 sweep.
ClassFunctionInt commutator_distribution_bruteforce(const PatternGroup& G, const ClassPartition& classes,
                                                    const Limits& limits = {});

struct DegreeMultiplicities {
  std::vector<std::uint64_t> m;       // m[i] = #{chi : chi(1) = q^i}
  std::vector<std::string> moments;   // M_k as exact rationals, k = 1..d
  std::uint64_t class_count = 0;
  std::uint64_t group_order = 0;
};

/// Solves sum_i m_i q^{(2-2k) i} = f^{*k}(1) / |G|^{2k-1} (k = 1..d) together
/// with sum_i m_i q^{2i} = |G|. Throws AssumptionViolated when the solution
/// is not a vector of nonnegative integers.
DegreeMultiplicities degree_multiplicities(const PatternGroup& G, const Limits& limits = {});

struct CliffordOrbit {
  std::vector<int> character;  // a in F_q^{|z|}, as field element codes
  std::uint64_t orbit_size = 0;
  std::uint64_t stabilizer_order = 0;
  std::uint64_t stabilizer_classes = 0;
};

struct CliffordReport {
  std::uint64_t dual_size = 0;
  std::vector<CliffordOrbit> orbits;
  std::uint64_t class_sum = 0;
  std::uint64_t class_count = 0;
  bool pass() const { return class_sum == class_count; }
};

/// With N = Z (last-column roots) and G = M x| N: #classes(G) equals the sum
/// over M-orbits on N^ of #classes(R_chi).
CliffordReport clifford_count_check(const PatternGroup& G, const Limits& limits = {});

}  // namespace patrep
