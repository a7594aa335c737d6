#include "patrep/field.hpp"

#include <sstream>

#include "patrep/error.hpp"

namespace patrep {

namespace {

using Poly = std::vector<int>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mod_inverse(int a, int p) {
  int r = 1;
  for (int e = p - 2, b = a % p; e > 0; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b over F_p; b must be nonzero after trimming.
Poly poly_mod(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  const int lead_inv = mod_inverse(b.back(), p);
  while (a.size() >= b.size()) {
    const int factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = ((a[i + shift] - factor * b[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly digits(int code, int p, int len) {
  Poly c(static_cast<std::size_t>(len));
  for (auto& d : c) {
    d = code % p;
    code /= p;
  }
  return c;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<int, int> prime_power(int q) {
  if (q < 2) throw InvalidInput("field order must be a prime power, got " + std::to_string(q));
  int p = 2;
  while (q % p != 0) ++p;
  int k = 0;
  for (int r = q; r > 1; r /= p) {
    if (r % p != 0)
      throw InvalidInput("field order must be a prime power, got " + std::to_string(q));
    ++k;
  }
  return {p, k};
}

bool is_irreducible(int p, std::span<const int> monic) {
  Poly f(monic.begin(), monic.end());
  trim(f);
  const int deg = static_cast<int>(f.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  // Try every monic divisor of degree 1..deg/2.
  for (int d = 1; d <= deg / 2; ++d) {
    int count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Poly g = digits(code, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<int> least_irreducible(int p, int k) {
  int count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (int code = 0; code < count; ++code) {
    Poly f = digits(code, p, k);
    f.push_back(1);
    if (is_irreducible(p, f)) return f;
  }
  throw InternalInvariantViolation("no irreducible polynomial found");
}

std::shared_ptr<const Field> Field::make(int p, int k, std::vector<int> modulus) {
  if (!is_prime(p)) throw InvalidInput("characteristic must be prime, got " + std::to_string(p));
  if (k < 1) throw InvalidInput("extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidInput("field order exceeds " + std::to_string(kMaxOrder));
  }
  if (modulus.empty()) {
    modulus = least_irreducible(p, k);
  } else {
    for (auto& c : modulus) {
      if (c < 0 || c >= p) throw InvalidInput("modulus coefficients must lie in [0, p)");
    }
    if (static_cast<int>(modulus.size()) == k) modulus.push_back(1);
    if (static_cast<int>(modulus.size()) != k + 1 || modulus.back() != 1)
      throw InvalidInput("modulus must be monic of degree k");
    if (!is_irreducible(p, modulus)) throw InvalidInput("modulus is not irreducible over F_p");
  }
  return std::shared_ptr<const Field>(new Field(p, k, std::move(modulus)));
}

std::shared_ptr<const Field> Field::of_order(int q, std::vector<int> modulus) {
  auto [p, k] = prime_power(q);
  return make(p, k, std::move(modulus));
}

Field::Field(int p, int k, std::vector<int> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (int i = 0; i < k; ++i) q_ *= p;
  const auto q = static_cast<std::size_t>(q_);
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.resize(q);
  trace_.resize(q);

  auto encode = [&](const Poly& c) {
    int code = 0;
    for (int i = k_ - 1; i >= 0; --i) code = code * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return static_cast<std::uint16_t>(code);
  };

  std::vector<Poly> polys(q);
  for (int a = 0; a < q_; ++a) polys[a] = digits(a, p_, k_);

  for (int a = 0; a < q_; ++a) {
    Poly n(k_);
    for (int i = 0; i < k_; ++i) n[i] = (p_ - polys[a][i]) % p_;
    neg_[a] = encode(n);
    for (int b = 0; b < q_; ++b) {
      Poly s(k_);
      for (int i = 0; i < k_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * q + b] = encode(s);
      Poly prod(2 * k_, 0);
      for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p_;
      mul_[a * q + b] = encode(poly_mod(prod, modulus_, p_));
    }
  }
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = static_cast<std::uint16_t>(b);
        break;
      }
  // Tr(a) = a + a^p + ... + a^{p^{k-1}} lies in the prime subfield.
  for (int a = 0; a < q_; ++a) {
    Fq x{static_cast<std::uint16_t>(a)};
    Fq t = x;
    for (int i = 1; i < k_; ++i) {
      x = pow(x, static_cast<std::uint64_t>(p_));
      t = add(t, x);
    }
    if (t.v >= p_) throw InternalInvariantViolation("trace left the prime subfield");
    trace_[a] = static_cast<std::uint8_t>(t.v);
  }
}

Fq Field::inv(Fq a) const {
  if (a.is_zero()) throw DivisionByZero("inverse of zero in " + describe());
  return Fq{inv_[a.v]};
}

Fq Field::pow(Fq a, std::uint64_t e) const {
  Fq r = one();
  for (; e > 0; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

Fq Field::from_int(long long n) const {
  const long long r = ((n % p_) + p_) % p_;
  return Fq{static_cast<std::uint16_t>(r)};
}

Fq Field::from_coeffs(std::span<const int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_) throw InvalidInput("too many coefficients for " + describe());
  int code = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const int c = ((coeffs[i] % p_) + p_) % p_;
    code = code * p_ + c;
  }
  return Fq{static_cast<std::uint16_t>(code)};
}

std::vector<int> Field::coeffs(Fq a) const { return digits(a.v, p_, k_); }

std::vector<Fq> Field::prime_basis() const {
  std::vector<Fq> basis;
  int code = 1;
  for (int i = 0; i < k_; ++i, code *= p_) basis.push_back(Fq{static_cast<std::uint16_t>(code)});
  return basis;
}

std::vector<Fq> Field::elements() const {
  std::vector<Fq> all(static_cast<std::size_t>(q_));
  for (int a = 0; a < q_; ++a) all[a] = Fq{static_cast<std::uint16_t>(a)};
  return all;
}

std::string Field::to_string(Fq a) const {
  if (k_ == 1) return std::to_string(a.v);
  std::ostringstream out;
  auto c = coeffs(a);
  out << '(';
  for (int i = 0; i < k_; ++i) out << (i ? "," : "") << c[i];
  out << ')';
  return out.str();
}

std::string Field::describe() const {
  std::ostringstream out;
  out << "GF(" << q_ << ")[";
  for (std::size_t i = 0; i < modulus_.size(); ++i) out << (i ? "," : "") << modulus_[i];
  out << ']';
  return out.str();
}

}  // namespace patrep
