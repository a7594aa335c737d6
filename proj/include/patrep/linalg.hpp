#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "patrep/field.hpp"

namespace patrep {

/// Dense row-major matrix over GF(q).
class MatrixFq {
 public:
  MatrixFq() = default;
  MatrixFq(FieldPtr field, std::size_t rows, std::size_t cols);

  static MatrixFq zero(FieldPtr field, std::size_t rows, std::size_t cols) {
    return MatrixFq(std::move(field), rows, cols);
  }
  static MatrixFq identity(FieldPtr field, std::size_t n);
  /// Builds a matrix from small integers, reduced into the prime subfield.
  static MatrixFq from_ints(FieldPtr field, const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  Fq& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Fq operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Fq> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Fq> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Fq>& data() const { return data_; }

  bool is_zero() const;
  MatrixFq block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const MatrixFq& b);
  void append_row(std::span<const Fq> values);

  friend bool operator==(const MatrixFq& a, const MatrixFq& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  FieldPtr field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fq> data_;
};

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b);
MatrixFq operator+(const MatrixFq& a, const MatrixFq& b);
MatrixFq operator-(const MatrixFq& a, const MatrixFq& b);
MatrixFq operator-(const MatrixFq& a);
MatrixFq transpose(const MatrixFq& a);
MatrixFq scaled(const MatrixFq& a, Fq s);

struct RrefResult {
  MatrixFq rref;  // reduced row echelon form, zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const MatrixFq& m);
std::size_t rank(const MatrixFq& m);

/// A subspace of F_q^ambient, canonicalized by the reduced row echelon form
/// of a basis, so that equal subspaces compare equal.
class SubspaceFq {
 public:
  SubspaceFq() = default;
  /// The zero subspace.
  SubspaceFq(FieldPtr field, std::size_t ambient);

  /// Span of the rows of `generators`.
  static SubspaceFq span(const MatrixFq& generators);
  static SubspaceFq span(FieldPtr field, std::size_t ambient, const std::vector<VectorFq>& vectors);
  static SubspaceFq whole(FieldPtr field, std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const MatrixFq& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FieldPtr& field_ptr() const { return field_; }

  /// v minus its reduction against the basis; zero iff v lies in the subspace.
  VectorFq reduce(std::span<const Fq> v) const;
  bool contains(std::span<const Fq> v) const;
  bool contains(const SubspaceFq& other) const;

  /// Coordinates of a member with respect to the basis rows.
  VectorFq coordinates(std::span<const Fq> v) const;
  VectorFq vector_from(std::span<const Fq> coords) const;

  /// Visits every vector of the subspace (q^dim of them) in coordinate order.
  void for_each_vector(const std::function<void(const VectorFq&)>& visit) const;

  friend bool operator==(const SubspaceFq& a, const SubspaceFq& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  FieldPtr field_;
  std::size_t ambient_ = 0;
  MatrixFq basis_;
  std::vector<std::size_t> pivots_;
};

/// Right kernel {v : M v = 0}.
SubspaceFq kernel(const MatrixFq& m);
SubspaceFq row_space(const MatrixFq& m);
SubspaceFq column_space(const MatrixFq& m);

SubspaceFq subspace_sum(const SubspaceFq& a, const SubspaceFq& b);
SubspaceFq intersect(const SubspaceFq& a, const SubspaceFq& b);
/// True when b is contained in a.
bool contains(const SubspaceFq& a, const SubspaceFq& b);

/// Solution set of M x = b: one particular solution (if consistent) plus the kernel.
struct SolveResult {
  std::optional<VectorFq> particular;
  SubspaceFq kernel;
};
SolveResult solve(const MatrixFq& m, std::span<const Fq> b);

/// Enumerates every dim-dimensional subspace of F_q^ambient by its RREF
/// basis. The callback returns false to stop early. Returns the number of
/// subspaces visited.
std::size_t for_each_subspace(const FieldPtr& field, std::size_t ambient, std::size_t dim,
                              const std::function<bool(const MatrixFq&)>& visit);

/// Number of dim-dimensional subspaces of F_q^ambient (Gaussian binomial),
/// saturating at `cap + 1`.
unsigned long long count_subspaces(int q, std::size_t ambient, std::size_t dim,
                                   unsigned long long cap);

}  // namespace patrep
