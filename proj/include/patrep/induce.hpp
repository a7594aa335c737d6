#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "patrep/coadjoint.hpp"
#include "patrep/cyclo.hpp"
#include "patrep/limits.hpp"
#include "patrep/pattern.hpp"
#include "patrep/polarize.hpp"

namespace patrep {

/// Class functions live on the canonical class list of a group; a context
/// bundles the group with that list so characters can be compared.
struct ClassContext {
  const PatternGroup* group = nullptr;
  ClassPartition classes;
  std::vector<std::uint32_t> inverse;  // class of g^{-1}

  static ClassContext build(const PatternGroup& G, const Limits& limits = {});
  const PatternGroup& G() const { return *group; }
  std::size_t count() const { return classes.count(); }
};

/// Values at class representatives, in class order.
struct Character {
  std::string group;  // PatternGroup::describe()
  std::vector<CycloValue> values;

  std::int64_t degree() const { return values.empty() ? 0 : values.front().to_integer(); }
  friend bool operator==(const Character& a, const Character& b) {
    return a.group == b.group && a.values == b.values;
  }
};

Character trivial_character(const ClassContext& ctx);

/// eta(1 + x) = psi(lambda_T(x)) on P = 1 + b (associative), or
/// eta(exp x) = psi(lambda_T(x)) on P = exp b (exponential).
class LinearCharacter {
 public:
  /// Throws NotACharacter unless lambda_T(b^2) = 0 (associative) or
  /// lambda_T([b, b]) = 0 with b Lie closed (exponential).
  LinearCharacter(const PatternGroup& G, Functional t, Subalgebra b,
                  PolarizationGroup kind = PolarizationGroup::Associative);

  bool in_domain(const GroupElement& g) const;
  /// Exponent e with eta(g) = zeta_p^e. Throws InvalidInput outside P.
  int exponent(const GroupElement& g) const;
  CycloValue operator()(const GroupElement& g) const;
  std::uint64_t domain_order() const;

 private:
  const PatternGroup& G_;
  Functional t_;
  Subalgebra b_;
  PolarizationGroup kind_;
};

/// Ind_P^G eta, computed with one pass over G that buckets P by class:
/// chi(g) = |C_G(g)| / |P| * sum over h in Cl(g) and P of eta(h).
Character induced_character(const ClassContext& ctx, const Functional& t, const Subalgebra& b,
                            PolarizationGroup kind = PolarizationGroup::Associative, const Limits& limits = {});

/// The textbook sum (1/|P|) sum_{x in G, x g x^-1 in P} eta(x g x^-1),
/// evaluated at each class representative. Cost |G| * #classes.
Character induced_character_reference(const ClassContext& ctx, const Functional& t, const Subalgebra& b,
                                      PolarizationGroup kind = PolarizationGroup::Associative,
                                      const Limits& limits = {});

/// Same sum evaluated at an arbitrary element; used to spot-check class
/// constancy.
CycloValue induced_value_at(const PatternGroup& G, const LinearCharacter& eta, const GroupElement& g,
                            const Limits& limits = {});

/// <chi1, chi2> = (1/|G|) sum_g chi1(g) conj(chi2(g)). Throws StructureError
/// on a group mismatch and NotACharacter when the result is not an integer.
std::int64_t inner_product(const ClassContext& ctx, const Character& a, const Character& b);

struct OrbitMethodCheck {
  std::string claim;
  bool ok = false;
  std::string detail;
};

struct OrbitMethodReport {
  std::vector<OrbitMethodCheck> checks;
  bool pass() const;
};

/// For T: degree equals sqrt of the orbit size; the character is
/// irreducible; two distinct associative polarizations (when they exist)
/// give equal characters; T and Ad*(g) T give equal characters for a
/// generator-walk g; and a functional from a different orbit gives a
/// different character.
OrbitMethodReport verify_orbit_method(const ClassContext& ctx, const Functional& t, const Limits& limits = {});

}  // namespace patrep
