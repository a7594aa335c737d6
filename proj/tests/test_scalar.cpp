#include <doctest.h>

#include "patrep/cyclo.hpp"
#include "patrep/error.hpp"
#include "patrep/field.hpp"
#include "patrep/linalg.hpp"

using namespace patrep;

TEST_SUITE("scalar") {
  TEST_CASE("prime field arithmetic") {
    auto f2 = Field::of_order(2);
    CHECK(f2->add(Fq{1}, Fq{1}) == Fq{0});
    auto f3 = Field::of_order(3);
    CHECK(f3->inv(Fq{2}) == Fq{2});
    CHECK_THROWS_AS(f3->inv(Fq{0}), DivisionByZero);
  }

  TEST_CASE("GF(4) reduces modulo x^2 + x + 1") {
    auto f4 = Field::of_order(4, {1, 1, 1});
    const Fq x = f4->from_coeffs(std::vector<int>{0, 1});
    CHECK(f4->mul(x, x) == f4->from_coeffs(std::vector<int>{1, 1}));
    for (Fq a : f4->elements())
      if (!a.is_zero()) CHECK(f4->mul(a, f4->inv(a)) == f4->one());
  }

  TEST_CASE("non prime powers are rejected") {
    CHECK_THROWS_AS(Field::of_order(6), InvalidInput);
    CHECK_THROWS_AS(Field::of_order(1), InvalidInput);
  }

  TEST_CASE("additive character") {
    auto f2 = Field::of_order(2);
    CHECK(additive_character(*f2, Fq{0}) == CycloValue::integer(2, 1));
    CHECK(additive_character(*f2, Fq{1}) == CycloValue::integer(2, -1));
    auto f4 = Field::of_order(4, {1, 1, 1});
    CHECK(additive_character(*f4, f4->from_coeffs(std::vector<int>{0, 1})) == CycloValue::integer(2, -1));
    auto f5 = Field::of_order(5);
    CHECK(additive_character(*f5, Fq{0}) == CycloValue::integer(5, 1));
  }

  TEST_CASE("cyclotomic arithmetic") {
    CHECK(CycloValue::zeta_power(3, 1) + CycloValue::zeta_power(3, 2) == CycloValue::integer(3, -1));
    CHECK(CycloValue::integer(2, -1) * CycloValue::integer(2, -1) == CycloValue::integer(2, 1));
    const CycloValue z = CycloValue::zeta_power(5, 1);
    CHECK(z.conj() == CycloValue::zeta_power(5, 4));
    CHECK(z.conj().coeffs() == std::vector<std::int64_t>{-1, -1, -1, -1});
    CHECK(z * z.conj() == CycloValue::integer(5, 1));
    std::vector<std::int64_t> all(7, 1);
    CHECK(CycloValue::from_exponent_counts(7, all) == CycloValue::integer(7, 0));
    CHECK(CycloValue::integer(3, 6).divided_exact(3) == CycloValue::integer(3, 2));
  }

  TEST_CASE("rank and kernel") {
    auto f2 = Field::of_order(2);
    CHECK(rank(MatrixFq::identity(f2, 2)) == 2);
    CHECK(kernel(MatrixFq::identity(f2, 2)).dim() == 0);
    const MatrixFq z(f2, 3, 4);
    CHECK(rank(z) == 0);
    CHECK(kernel(z).dim() == 4);
    const auto k = kernel(MatrixFq::from_ints(f2, {{1, 1}, {1, 1}}));
    CHECK(k.dim() == 1);
    CHECK(k.contains(VectorFq{Fq{1}, Fq{1}}));
  }

  TEST_CASE("subspace sum and intersection") {
    auto f2 = Field::of_order(2);
    const VectorFq e1{Fq{1}, Fq{0}, Fq{0}}, e2{Fq{0}, Fq{1}, Fq{0}};
    const auto a = SubspaceFq::span(f2, 3, {e1});
    const auto b = SubspaceFq::span(f2, 3, {e2});
    CHECK(intersect(a, b).dim() == 0);
    CHECK(subspace_sum(a, b).dim() == 2);
    CHECK(subspace_sum(a, a) == a);
    CHECK(intersect(a, a) == a);

    auto f3 = Field::of_order(3);
    const auto c = SubspaceFq::span(f3, 2, {VectorFq{Fq{1}, Fq{1}}});
    const auto d = SubspaceFq::span(f3, 2, {VectorFq{Fq{1}, Fq{0}}, VectorFq{Fq{0}, Fq{1}}});
    CHECK(intersect(c, d) == c);
  }

  TEST_CASE("subspace enumeration matches the Gaussian binomial") {
    auto f2 = Field::of_order(2);
    CHECK(count_subspaces(2, 4, 2, 1000) == 35);
    std::size_t seen = 0;
    for_each_subspace(f2, 4, 2, [&](const MatrixFq&) {
      ++seen;
      return true;
    });
    CHECK(seen == 35);
  }

  TEST_CASE("linear solve") {
    auto f3 = Field::of_order(3);
    const auto m = MatrixFq::from_ints(f3, {{1, 2}, {0, 1}});
    const auto r = solve(m, VectorFq{Fq{0}, Fq{1}});
    REQUIRE(r.particular);
    CHECK(*r.particular == VectorFq{Fq{1}, Fq{1}});
  }
}
