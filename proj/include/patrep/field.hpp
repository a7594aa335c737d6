#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace patrep {

/// An element of GF(p^k), stored as the base-p integer code of its
/// polynomial-basis coefficients: v = c_0 + c_1 p + ... + c_{k-1} p^{k-1}.
/// The value is only meaningful together with the Field that produced it.
struct Fq {
  std::uint16_t v = 0;

  friend constexpr bool operator==(Fq, Fq) = default;
  friend constexpr auto operator<=>(Fq, Fq) = default;
  constexpr bool is_zero() const { return v == 0; }
};

using VectorFq = std::vector<Fq>;

/// GF(p^k) = F_p[x] / (modulus), with full operation tables.
///
/// Fields are immutable and shared through FieldPtr; every other value type
/// in the library refers back to one.
class Field {
 public:
  /// Largest supported field order; keeps the q*q tables small.
  static constexpr int kMaxOrder = 1024;

  /// Builds GF(p^k). An empty modulus selects the lexicographically least
  /// monic irreducible polynomial of degree k (coefficients listed from the
  /// constant term up, leading 1 included or omitted).
  static std::shared_ptr<const Field> make(int p, int k,
                                           std::vector<int> modulus = {});
  /// Builds GF(q) for a prime power q.
  static std::shared_ptr<const Field> of_order(int q,
                                               std::vector<int> modulus = {});

  int p() const { return p_; }
  int k() const { return k_; }
  int q() const { return q_; }
  /// Monic modulus, constant term first, length k+1.
  const std::vector<int>& modulus() const { return modulus_; }

  Fq zero() const { return Fq{0}; }
  Fq one() const { return Fq{1}; }

  Fq add(Fq a, Fq b) const { return Fq{add_[a.v * q_ + b.v]}; }
  Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
  Fq mul(Fq a, Fq b) const { return Fq{mul_[a.v * q_ + b.v]}; }
  Fq neg(Fq a) const { return Fq{neg_[a.v]}; }
  /// Throws DivisionByZero for a == 0.
  Fq inv(Fq a) const;
  Fq div(Fq a, Fq b) const { return mul(a, inv(b)); }
  Fq pow(Fq a, std::uint64_t e) const;

  /// Image of an integer in the prime subfield.
  Fq from_int(long long n) const;
  Fq from_coeffs(std::span<const int> coeffs) const;
  std::vector<int> coeffs(Fq a) const;
  /// Absolute trace Tr_{F_q/F_p}(a), as an integer in [0, p).
  int trace(Fq a) const { return trace_[a.v]; }
  /// 1, x, ..., x^{k-1}: an F_p-basis of the field.
  std::vector<Fq> prime_basis() const;
  /// All q elements in code order.
  std::vector<Fq> elements() const;

  bool contains(Fq a) const { return a.v < q_; }
  std::string to_string(Fq a) const;
  /// Canonical textual description, e.g. "GF(4)[1,1,1]".
  std::string describe() const;

 private:
  Field(int p, int k, std::vector<int> modulus);

  int p_;
  int k_;
  int q_;
  std::vector<int> modulus_;
  std::vector<std::uint16_t> add_;
  std::vector<std::uint16_t> mul_;
  std::vector<std::uint16_t> neg_;
  std::vector<std::uint16_t> inv_;
  std::vector<std::uint8_t> trace_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool is_prime(int n);
/// Splits q = p^k; throws InvalidInput when q is not a prime power.
std::pair<int, int> prime_power(int q);
/// True when the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible(int p, std::span<const int> monic);
/// Lexicographically least monic irreducible polynomial of degree k over F_p,
/// comparing coefficients from x^{k-1} down to the constant term.
std::vector<int> least_irreducible(int p, int k);

}  // namespace patrep
