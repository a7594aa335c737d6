#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "patrep/field.hpp"
#include "patrep/linalg.hpp"

namespace patrep {

/// Positive root eps_i - eps_j, 1 <= i < j <= n, i.e. matrix position (i, j).
struct Root {
  int i = 0;
  int j = 0;
  friend constexpr bool operator==(Root, Root) = default;
  friend constexpr auto operator<=>(Root, Root) = default;
};

/// A closed set of positive roots, kept in lexicographic order.
class ClosedRootSet {
 public:
  ClosedRootSet() = default;

  /// Smallest closed superset of `roots` inside Delta_n. Throws InvalidRoot.
  static ClosedRootSet closure(std::span<const Root> roots, int n);
  /// Delta_n itself.
  static ClosedRootSet full(int n);

  int n() const { return n_; }
  std::size_t size() const { return roots_.size(); }
  bool empty() const { return roots_.empty(); }
  const std::vector<Root>& roots() const { return roots_; }
  const Root& operator[](std::size_t r) const { return roots_[r]; }

  /// Index of (i, j) in lexicographic order, or -1.
  int index_of(int i, int j) const;
  bool contains(int i, int j) const { return index_of(i, j) >= 0; }
  bool is_primitive(std::size_t r) const { return primitive_[r]; }
  /// D^0: roots that are not a sum of two roots of D.
  std::vector<Root> primitive() const;
  /// D^#: the complement of D^0.
  std::vector<Root> nonprimitive() const;

  /// Canonical text, e.g. "n=3:(1,2),(1,3),(2,3)".
  std::string to_string() const;

  friend bool operator==(const ClosedRootSet& a, const ClosedRootSet& b) {
    return a.n_ == b.n_ && a.roots_ == b.roots_;
  }

 private:
  int n_ = 0;
  std::vector<Root> roots_;
  std::vector<int> index_;  // n*n grid, 0-based positions
  std::vector<bool> primitive_;
};

bool is_closed(std::span<const Root> roots, int n);
/// Unipotent radical of the standard parabolic for the given block sizes.
ClosedRootSet parabolic_radical(std::span<const int> partition);
/// Largest column index appearing in D. Throws InvalidInput when D is empty.
int u_rank(const ClosedRootSet& d);

/// X in g_D, coordinates indexed by the root order of D.
struct AlgebraElement {
  VectorFq coords;
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
};

/// The unipotent matrix 1 + x with x in g_D.
struct GroupElement {
  VectorFq coords;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// T in g_{-D} ~ g_D^*: coords[r] is the entry T_{j,i} for root r = (i, j).
struct Functional {
  VectorFq coords;
  friend bool operator==(const Functional&, const Functional&) = default;
  friend auto operator<=>(const Functional& a, const Functional& b) { return a.coords <=> b.coords; }
};

/// Entry (a, b, c) states that e_{root a} * e_{root b} = e_{root c}.
struct RootProduct {
  int a;
  int b;
  int c;
};

/// The pattern algebra g_D and pattern group G_D = 1 + g_D over GF(q).
///
/// Products use the sparse form of ordinary matrix multiplication restricted
/// to the support D; to_matrix / from_matrix expose the full n x n model.
class PatternGroup {
 public:
  PatternGroup(ClosedRootSet roots, FieldPtr field);

  const ClosedRootSet& roots() const { return roots_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  int n() const { return roots_.n(); }
  std::size_t dim() const { return roots_.size(); }
  int q() const { return field_->q(); }
  const std::vector<RootProduct>& products() const { return products_; }

  /// q^dim, or 0 when it does not fit in 62 bits.
  std::uint64_t order() const { return order_; }
  /// Throws ResourceLimit when q^dim exceeds cap.
  std::uint64_t order_within(std::uint64_t cap, const std::string& what) const;

  AlgebraElement zero() const { return {VectorFq(dim())}; }
  GroupElement identity() const { return {VectorFq(dim())}; }
  AlgebraElement unit(std::size_t r, Fq value) const;
  GroupElement root_element(std::size_t r, Fq value) const;
  Functional functional_unit(std::size_t r, Fq value) const;
  Functional zero_functional() const { return {VectorFq(dim())}; }

  AlgebraElement add(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement scale(Fq s, const AlgebraElement& x) const;
  AlgebraElement product(const AlgebraElement& x, const AlgebraElement& y) const;
  AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) const;
  GroupElement mul(const GroupElement& g, const GroupElement& h) const;
  GroupElement inverse(const GroupElement& g) const;
  /// g h g^{-1}
  GroupElement conjugate(const GroupElement& g, const GroupElement& h) const;
  GroupElement commutator(const GroupElement& g, const GroupElement& h) const;

  // Allocation-free kernels on raw coordinate spans (length dim()).
  void product_into(std::span<const Fq> x, std::span<const Fq> y, std::span<Fq> out) const;
  void mul_into(std::span<const Fq> g, std::span<const Fq> h, std::span<Fq> out) const;
  void inverse_into(std::span<const Fq> g, std::span<Fq> out) const;

  /// lambda_T(X) = tr(T X) = sum_r T_r X_r.
  Fq pair(const Functional& t, const AlgebraElement& x) const;
  Fq pair(std::span<const Fq> t, std::span<const Fq> x) const;

  MatrixFq to_matrix(const AlgebraElement& x) const;
  MatrixFq to_matrix(const GroupElement& g) const;
  MatrixFq to_matrix(const Functional& t) const;
  /// Reads the entries at positions of D; throws StructureError when m has
  /// nonzero entries outside D (strict upper part only is expected).
  AlgebraElement algebra_from_matrix(const MatrixFq& m) const;
  /// [m]_{g_{-D}}: keeps entries (j, i) with (i, j) in D.
  Functional project_to_dual(const MatrixFq& m) const;

  /// Lexicographic index of a coordinate tuple (first root most significant).
  std::uint64_t encode(std::span<const Fq> coords) const;
  void decode(std::uint64_t index, std::span<Fq> out) const;
  VectorFq decode(std::uint64_t index) const;

  /// x_alpha(xi) for every root alpha and xi in an F_p-basis of GF(q); these
  /// generate G_D.
  const std::vector<GroupElement>& generators() const { return generators_; }

  /// Visits every group element in index order. Throws ResourceLimit when
  /// |G| exceeds cap.
  void enumerate(std::uint64_t cap, const std::function<void(const GroupElement&)>& visit) const;

  /// Canonical text identifying the group (roots plus field).
  std::string describe() const;

 private:
  ClosedRootSet roots_;
  FieldPtr field_;
  std::vector<RootProduct> products_;
  std::vector<GroupElement> generators_;
  std::uint64_t order_ = 0;
};

/// Root-set-level group spec: either explicit roots or a partition.
struct GroupSpec {
  int n = 0;
  int q = 0;
  std::vector<Root> roots;        // used when partition is empty
  std::vector<int> partition;     // optional
  std::vector<int> modulus;       // optional, for q = p^k with k > 1

  ClosedRootSet root_set() const;
  PatternGroup build() const;
  /// Canonical JSON text; stable for hashing.
  std::string canonical() const;
};

/// Parses {"n","q","roots"} or {"partition","q"} (+ optional "modulus").
GroupSpec parse_group_spec(const std::string& json_text);

}  // namespace patrep
