#pragma once

#include <optional>
#include <string>
#include <vector>

#include "patrep/coadjoint.hpp"
#include "patrep/limits.hpp"
#include "patrep/linalg.hpp"
#include "patrep/pattern.hpp"

namespace patrep {

/// A subspace of g_D together with the structural flags the orbit method
/// cares about. Coordinates follow the root order of D.
struct Subalgebra {
  SubspaceFq space;
  bool mult_closed = false;
  bool pattern = false;       // spanned by root vectors
  std::vector<int> roots;     // root indices, when pattern

  static Subalgebra from_space(const PatternGroup& G, SubspaceFq space);
  static Subalgebra from_roots(const PatternGroup& G, std::vector<int> root_indices);
  static Subalgebra whole(const PatternGroup& G);

  std::size_t dim() const { return space.dim(); }
  bool contains(std::span<const Fq> x) const;
  /// Largest column index carrying a nonzero entry of some element, 0 for {0}.
  int u_rank(const PatternGroup& G) const;
  std::string describe(const PatternGroup& G) const;

  friend bool operator==(const Subalgebra& a, const Subalgebra& b) { return a.space == b.space; }
};

bool is_mult_closed(const PatternGroup& G, const SubspaceFq& space);
bool is_lie_closed(const PatternGroup& G, const SubspaceFq& space);
/// lambda_T(b^2) = 0, i.e. T vanishes on every product of two elements of b.
bool annihilates_square(const PatternGroup& G, const Functional& t, const SubspaceFq& space);
/// lambda_T([b, b]) = 0.
bool is_isotropic(const PatternGroup& G, const Functional& t, const SubspaceFq& space);

/// B_T(x, y) = lambda_T(xy - yx).
Fq bform(const PatternGroup& G, const Functional& t, const AlgebraElement& x, const AlgebraElement& y);
/// Radical of B_T as a subspace of g_D.
SubspaceFq bform_radical(const PatternGroup& G, const Functional& t);
/// Dimension every polarization of T has: (dim g + dim g^T) / 2.
std::size_t polarization_dim(const PatternGroup& G, const Functional& t);

struct PolarizationVerdict {
  bool ok = false;
  std::vector<std::string> reasons;  // one line per failed clause
};
PolarizationVerdict is_associative_polarization(const PatternGroup& G, const Functional& t,
                                                const Subalgebra& b);

enum class Strategy { Pattern, FourPart, Exhaustive };
std::string to_string(Strategy s);

/// Searches for an associative polarization. std::nullopt means only that
/// this strategy found nothing.
std::optional<Subalgebra> find_associative_polarization(const PatternGroup& G, const Functional& t,
                                                        Strategy strategy, const Limits& limits = {});

/// Every associative polarization of T (exhaustive over subspaces containing
/// the radical), up to max_count results.
std::vector<Subalgebra> all_associative_polarizations(const PatternGroup& G, const Functional& t,
                                                      std::size_t max_count, const Limits& limits = {});

/// An isotropic Lie subalgebra of polarization dimension. With
/// prefer_nonassociative, one that is not multiplicatively closed is
/// returned when such exists.
std::optional<Subalgebra> find_lie_polarization(const PatternGroup& G, const Functional& t,
                                                bool prefer_nonassociative, const Limits& limits = {});

struct CertificationEntry {
  Functional representative;
  std::uint64_t orbit_size = 0;
  std::optional<Subalgebra> polarization;
  std::optional<Strategy> strategy;  // the one that succeeded
};

struct GoodTypeReport {
  std::vector<CertificationEntry> entries;
  bool certified = false;
  std::size_t succeeded = 0;
};

/// Tries the strategies in order on every orbit representative.
GoodTypeReport certify_good_type(const PatternGroup& G, const std::vector<Strategy>& strategies,
                                 const Limits& limits = {});
/// Default order: pattern, fourpart (when D is a 4-block radical), exhaustive.
std::vector<Strategy> default_strategies(const PatternGroup& G);

/// How P is formed from a polarization b.
enum class PolarizationGroup {
  Associative,  // P = 1 + b, b multiplicatively closed
  Exponential,  // P = exp(b), b a Lie subalgebra, p > n
};

/// L(T) = { mu : mu agrees with lambda_T on b }, sorted.
std::vector<Functional> l_fiber(const PatternGroup& G, const Functional& t, const Subalgebra& b,
                                PolarizationGroup kind = PolarizationGroup::Associative);
/// Ad*_P T, sorted.
std::vector<Functional> polarization_group_orbit(const PatternGroup& G, const Functional& t,
                                                 const Subalgebra& b, PolarizationGroup kind,
                                                 const Limits& limits = {});

/// Truncated exponential and logarithm; both require p > n.
GroupElement exp_map(const PatternGroup& G, const AlgebraElement& x);
AlgebraElement log_map(const PatternGroup& G, const GroupElement& g);

}  // namespace patrep
