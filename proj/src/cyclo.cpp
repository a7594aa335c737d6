#include "patrep/cyclo.hpp"

#include <sstream>

#include "patrep/error.hpp"

namespace patrep {

CycloValue::CycloValue(int p) : p_(p), c_(static_cast<std::size_t>(p - 1), 0) {
  if (!is_prime(p)) throw InvalidInput("cyclotomic ring needs a prime, got " + std::to_string(p));
}

CycloValue CycloValue::integer(int p, std::int64_t n) {
  CycloValue v(p);
  v.c_[0] = n;
  return v;
}

CycloValue CycloValue::zeta_power(int p, long long e) {
  std::vector<std::int64_t> full(static_cast<std::size_t>(p), 0);
  full[static_cast<std::size_t>(((e % p) + p) % p)] = 1;
  return reduce(p, full);
}

CycloValue CycloValue::from_exponent_counts(int p, std::span<const std::int64_t> counts) {
  if (static_cast<int>(counts.size()) != p) throw InvalidInput("exponent count vector must have length p");
  return reduce(p, counts);
}

CycloValue CycloValue::reduce(int p, std::span<const std::int64_t> full) {
  CycloValue v(p);
  const std::int64_t top = full[static_cast<std::size_t>(p - 1)];
  for (int i = 0; i < p - 1; ++i) v.c_[i] = full[i] - top;
  return v;
}

void CycloValue::check_same(const CycloValue& o) const {
  if (p_ != o.p_) throw StructureError("cyclotomic values over different primes");
}

CycloValue CycloValue::operator+(const CycloValue& o) const {
  CycloValue r = *this;
  r += o;
  return r;
}

CycloValue& CycloValue::operator+=(const CycloValue& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloValue CycloValue::operator-(const CycloValue& o) const { return *this + (-o); }

CycloValue CycloValue::operator-() const { return scaled(-1); }

CycloValue CycloValue::operator*(const CycloValue& o) const {
  check_same(o);
  std::vector<std::int64_t> full(static_cast<std::size_t>(p_), 0);
  for (int i = 0; i < p_ - 1; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < p_ - 1; ++j) full[(i + j) % p_] += c_[i] * o.c_[j];
  }
  return reduce(p_, full);
}

CycloValue CycloValue::scaled(std::int64_t s) const {
  CycloValue r = *this;
  for (auto& c : r.c_) c *= s;
  return r;
}

CycloValue CycloValue::conj() const {
  std::vector<std::int64_t> full(static_cast<std::size_t>(p_), 0);
  for (int i = 0; i < p_ - 1; ++i) full[(p_ - i) % p_] += c_[i];
  return reduce(p_, full);
}

CycloValue CycloValue::divided_exact(std::int64_t d) const {
  if (d == 0) throw DivisionByZero("cyclotomic value divided by zero");
  CycloValue r = *this;
  for (auto& c : r.c_) {
    if (c % d != 0)
      throw InternalInvariantViolation("inexact division of " + to_string() + " by " + std::to_string(d));
    c /= d;
  }
  return r;
}

bool CycloValue::is_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::int64_t CycloValue::to_integer() const {
  if (!is_integer()) throw InternalInvariantViolation(to_string() + " is not a rational integer");
  return c_[0];
}

std::string CycloValue::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < c_.size(); ++i) out << (i ? "," : "") << c_[i];
  out << ')';
  return out.str();
}

CycloValue additive_character(const Field& field, Fq x) {
  return CycloValue::zeta_power(field.p(), field.trace(x));
}

}  // namespace patrep
