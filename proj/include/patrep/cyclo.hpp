#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "patrep/field.hpp"

namespace patrep {

/// An element of Z[zeta_p] in the basis 1, zeta, ..., zeta^{p-2}.
///
/// zeta^{p-1} is rewritten as -(1 + zeta + ... + zeta^{p-2}); with this
/// basis the representation is unique, so equality is coefficient equality.
/// For p = 2 the ring is Z and zeta = -1.
class CycloValue {
 public:
  explicit CycloValue(int p = 2);

  static CycloValue integer(int p, std::int64_t n);
  static CycloValue zeta_power(int p, long long e);
  /// Sum of counts[e] * zeta^e for e in [0, p).
  static CycloValue from_exponent_counts(int p, std::span<const std::int64_t> counts);

  int p() const { return p_; }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  CycloValue operator+(const CycloValue& o) const;
  CycloValue operator-(const CycloValue& o) const;
  CycloValue operator-() const;
  CycloValue operator*(const CycloValue& o) const;
  CycloValue& operator+=(const CycloValue& o);
  CycloValue scaled(std::int64_t s) const;
  /// Complex conjugation zeta^i -> zeta^{p-i}.
  CycloValue conj() const;
  /// Exact division by an integer; throws InternalInvariantViolation if inexact.
  CycloValue divided_exact(std::int64_t d) const;

  bool is_integer() const;
  /// The value as a rational integer; only valid when is_integer().
  std::int64_t to_integer() const;

  friend bool operator==(const CycloValue&, const CycloValue&) = default;
  friend auto operator<=>(const CycloValue& a, const CycloValue& b) {
    return a.c_ <=> b.c_;
  }

  /// Coefficient tuple, e.g. "(2,0,-1,0)".
  std::string to_string() const;

 private:
  void check_same(const CycloValue& o) const;
  // Normalizes a length-p exponent vector into the basis.
  static CycloValue reduce(int p, std::span<const std::int64_t> full);

  int p_;
  std::vector<std::int64_t> c_;
};

/// The additive character psi(x) = zeta_p^{Tr(x)}.
CycloValue additive_character(const Field& field, Fq x);

}  // namespace patrep
