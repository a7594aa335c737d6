#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "patrep/coadjoint.hpp"
#include "patrep/induce.hpp"
#include "patrep/limits.hpp"
#include "patrep/linalg.hpp"
#include "patrep/pattern.hpp"
#include "patrep/polarize.hpp"

namespace patrep {

using Partition4 = std::array<int, 4>;

/// A functional on the Lie algebra of U_{n1,n2,n3,n4}, split into its six
/// strictly-lower blocks. Block T_ij has shape n_i x n_j (1-based i > j).
struct BlockFunctional {
  Partition4 parts{};
  MatrixFq t21, t31, t32, t41, t42, t43;

  static BlockFunctional zero(const FieldPtr& field, const Partition4& parts);
  static BlockFunctional from_functional(const PatternGroup& G, const Partition4& parts, const Functional& t);
  Functional to_functional(const PatternGroup& G) const;

  MatrixFq& block(int i, int j);
  const MatrixFq& block(int i, int j) const;
};

/// Returns the 4-part partition when D is exactly that parabolic radical.
std::optional<Partition4> detect_fourpart(const ClosedRootSet& d);
/// Offset (0-based) of block b (1-based) in the matrix.
int block_offset(const Partition4& parts, int b);
/// Root index of entry (a, c) of block (bi, bj), bi < bj, in G.
int block_root(const PatternGroup& G, const Partition4& parts, int bi, int bj, int a, int c);

/// rowspace(T31) meets rowspace(T41) trivially and colspace(T42) meets
/// colspace(T41) trivially.
bool is_normalized(const BlockFunctional& t);

struct NormalizedRepresentative {
  BlockFunctional t;
  GroupElement witness;  // Ad*(witness) input = t
  std::size_t iterations = 0;
  bool used_fallback = false;
};

/// Moves T inside its coadjoint orbit to a normalized functional. T41 is
/// never changed.
NormalizedRepresentative normalize_representative(const PatternGroup& G, const BlockFunctional& t,
                                                  const Limits& limits = {});

/// 2 (n3 r41 + n2 r41 + n2 r31 + n3 r42 - r31 r42).
std::size_t stab_codim_formula(const Partition4& parts, std::size_t r31, std::size_t r41, std::size_t r42);

/// The subalgebra Y23 T31 = 0, T42 Y23 = 0, T41 Y12 = 0, Y34 T41 = 0.
/// Throws NotNormalized when the span conditions fail.
Subalgebra build_bT(const PatternGroup& G, const BlockFunctional& t);

enum class LemmaPart { One, Two };

/// Three independent evaluations of a codimension that must agree.
struct LemmaCodim {
  std::size_t closed_form = 0;
  std::size_t brute_force = 0;   // ambient - kernel dim of the raw system
  std::size_t reduced_form = 0;  // same, after the rank-normal-form changes of basis
  bool agree() const { return closed_form == brute_force && brute_force == reduced_form; }
};

/// Part One: {X23 : T42 X23 = 0, X23 T31 = 0} in Mat(n2 x n3).
/// Part Two: {(X12, X34) : T31 X12 = X34 T42, T41 X12 = 0, X34 T41 = 0};
/// requires the span-disjointness hypotheses, otherwise InvalidInput.
/// Shapes: T31 is n3 x n1, T42 is n4 x n2, T41 is n4 x n1.
LemmaCodim lemma_codim(LemmaPart part, const MatrixFq& t31, const MatrixFq& t42,
                       const std::optional<MatrixFq>& t41 = std::nullopt);

struct LemmaSweep {
  std::uint64_t instances = 0;
  std::uint64_t rank_cases = 0;  // distinct (shape, ranks) combinations covered
  std::uint64_t mismatches = 0;
  std::vector<std::string> mismatch_details;
  bool pass() const { return mismatches == 0 && instances > 0; }
};

/// Both parts over every shape with 1 <= n_i <= max_n and every realizable
/// rank combination, `per_case` seeded random instances each. Part two
/// instances satisfy the span-disjointness hypotheses by construction.
LemmaSweep lemma_codim_sweep(const FieldPtr& field, int max_n, std::uint64_t per_case, std::uint64_t seed);

/// Invertible L, R with L M R = [[I_r, 0], [0, 0]].
struct RankNormalForm {
  MatrixFq left, right;
  std::size_t rank = 0;
};
RankNormalForm rank_normal_form(const MatrixFq& m);

struct FourPartEntry {
  Functional representative;  // least element of the orbit
  std::uint64_t orbit_size = 0;
  BlockFunctional normalized;
  GroupElement witness;
  std::size_t r31 = 0, r41 = 0, r42 = 0;
  std::size_t formula_codim = 0;
  std::size_t brute_codim = 0;
  Subalgebra b;
  PolarizationVerdict verdict;
  Character character;
  std::int64_t norm = 0;  // <chi, chi>
};

struct FourPartClassification {
  Partition4 parts{};
  std::uint64_t group_order = 0;
  std::size_t class_count = 0;
  std::vector<FourPartEntry> entries;
  bool all_normalized = false;
  bool codim_matches = false;
  bool all_polarizations = false;
  bool all_irreducible = false;
  bool pairwise_distinct = false;
  bool degree_sum_ok = false;  // sum deg^2 = |G|
  bool count_ok = false;       // #chars = #classes
  bool pass() const {
    return all_normalized && codim_matches && all_polarizations && all_irreducible && pairwise_distinct &&
           degree_sum_ok && count_ok;
  }
};

/// Full pipeline on U_{n1..n4}: one irreducible character per orbit.
/// Throws InvalidInput unless the partition has exactly four parts.
FourPartClassification classify_fourpart(std::span<const int> partition, const FieldPtr& field,
                                         const Limits& limits = {});

}  // namespace patrep
