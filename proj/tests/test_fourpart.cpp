#include <doctest.h>

#include <random>

#include "patrep/coadjoint.hpp"
#include "patrep/error.hpp"
#include "patrep/fourpart.hpp"
#include "support.hpp"

using namespace patrep;
using namespace patrep::test;

TEST_SUITE("fourpart") {
  TEST_CASE("detection") {
    CHECK(detect_fourpart(parabolic_radical(std::vector<int>{1, 2, 2, 1})) == Partition4{1, 2, 2, 1});
    CHECK_FALSE(detect_fourpart(parabolic_radical(std::vector<int>{1, 1, 1})));
  }

  TEST_CASE("block round trip") {
    const Partition4 parts{1, 2, 2, 1};
    const auto G = radical({1, 2, 2, 1}, 3);
    for (std::uint64_t i = 0; i < G.order(); i += 101) {
      const Functional t{G.decode(i)};
      CHECK(BlockFunctional::from_functional(G, parts, t).to_functional(G) == t);
    }
  }

  TEST_CASE("normalization") {
    const Partition4 parts{1, 1, 1, 1};
    const auto G = radical({1, 1, 1, 1}, 3);
    const auto z = BlockFunctional::zero(G.field_ptr(), parts);
    const auto nz = normalize_representative(G, z);
    CHECK(nz.t.to_functional(G) == z.to_functional(G));

    BlockFunctional t = z;
    t.t41.row(0)[0] = Fq{1};
    t.t31.row(0)[0] = Fq{1};
    CHECK_FALSE(is_normalized(t));
    // Moving by 1 + X34 with X34 = -1 shifts T31 by X34 T41.
    const GroupElement g = x(G, 3, 4, -1);
    const auto moved = BlockFunctional::from_functional(G, parts, coadjoint_act(G, g, t.to_functional(G)));
    CHECK(moved.t31.is_zero());
    const auto n = normalize_representative(G, t);
    CHECK(is_normalized(n.t));
    CHECK(n.t.t41 == t.t41);
    CHECK(coadjoint_act(G, n.witness, t.to_functional(G)) == n.t.to_functional(G));
  }

  TEST_CASE("normalization on random functionals") {
    const Partition4 parts{1, 2, 2, 1};
    const auto G = radical({1, 2, 2, 1}, 2);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 50; ++k) {
      Functional t = G.zero_functional();
      for (auto& c : t.coords) c = Fq{static_cast<std::uint16_t>(rng() % 2)};
      const auto n = normalize_representative(G, BlockFunctional::from_functional(G, parts, t));
      CHECK(is_normalized(n.t));
      CHECK(intersect(row_space(n.t.t31), row_space(n.t.t41)).dim() == 0);
      CHECK(intersect(column_space(n.t.t42), column_space(n.t.t41)).dim() == 0);
      CHECK(coadjoint_act(G, n.witness, t) == n.t.to_functional(G));
    }
  }

  TEST_CASE("codimension formula") {
    CHECK(stab_codim_formula({1, 1, 1, 1}, 0, 0, 0) == 0);
    CHECK(stab_codim_formula({1, 1, 1, 1}, 0, 1, 0) == 4);
    CHECK(stab_codim_formula({2, 2, 2, 2}, 1, 0, 1) == 6);
    CHECK_THROWS_AS(stab_codim_formula({1, 1, 1, 1}, 1, 1, 0), InvalidInput);
  }

  TEST_CASE("formula matches brute force for a concrete (2,2,2,2) functional") {
    const Partition4 parts{2, 2, 2, 2};
    const auto G = radical({2, 2, 2, 2}, 2);
    BlockFunctional t = BlockFunctional::zero(G.field_ptr(), parts);
    t.t31.row(0)[0] = Fq{1};
    t.t42.row(0)[0] = Fq{1};
    const std::size_t brute = G.dim() - stabilizer_subalgebra(G, t.to_functional(G)).dim();
    CHECK(brute == 6);
  }

  TEST_CASE("b_T") {
    const Partition4 parts{1, 1, 1, 1};
    const auto G = radical({1, 1, 1, 1}, 2);
    const auto z = BlockFunctional::zero(G.field_ptr(), parts);
    CHECK(build_bT(G, z).dim() == G.dim());

    BlockFunctional t = z;
    t.t41.row(0)[0] = Fq{1};
    const auto b = build_bT(G, t);
    CHECK(b.dim() == 4);
    CHECK_FALSE(b.contains(e(G, 1, 2).coords));
    CHECK_FALSE(b.contains(e(G, 3, 4).coords));
    CHECK(is_associative_polarization(G, t.to_functional(G), b).ok);

    BlockFunctional bad = t;
    bad.t31.row(0)[0] = Fq{1};
    CHECK_THROWS_AS(build_bT(G, bad), NotNormalized);
  }

  TEST_CASE("b_T on normalized random (1,2,2,1) functionals") {
    const Partition4 parts{1, 2, 2, 1};
    const auto G = radical({1, 2, 2, 1}, 2);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 30; ++k) {
      Functional t = G.zero_functional();
      for (auto& c : t.coords) c = Fq{static_cast<std::uint16_t>(rng() % 2)};
      const auto n = normalize_representative(G, BlockFunctional::from_functional(G, parts, t));
      CHECK(is_associative_polarization(G, n.t.to_functional(G), build_bT(G, n.t)).ok);
    }
  }

  TEST_CASE("lemma examples") {
    auto f2 = Field::of_order(2);
    const MatrixFq z22(f2, 2, 2);
    CHECK(lemma_codim(LemmaPart::One, z22, z22).agree());
    CHECK(lemma_codim(LemmaPart::One, z22, z22).closed_form == 0);

    MatrixFq t31(f2, 2, 1), t42(f2, 1, 2);
    t31.row(0)[0] = Fq{1};
    t42.row(0)[0] = Fq{1};
    const auto one = lemma_codim(LemmaPart::One, t31, t42);
    CHECK(one.closed_form == 3);
    CHECK(one.agree());

    const MatrixFq z11(f2, 1, 1);
    MatrixFq t41(f2, 1, 1);
    t41.row(0)[0] = Fq{1};
    const auto two = lemma_codim(LemmaPart::Two, z11, z11, t41);
    CHECK(two.closed_form == 2);
    CHECK(two.agree());
  }

  TEST_CASE("rank normal form") {
    auto f3 = Field::of_order(3);
    const auto m = MatrixFq::from_ints(f3, {{1, 2, 0}, {2, 1, 0}, {0, 0, 1}});
    const auto r = rank_normal_form(m);
    CHECK(r.rank == 2);
    CHECK(r.left * m * r.right == MatrixFq::from_ints(f3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}}));
    const auto s = MatrixFq::from_ints(f3, {{1, 2}, {2, 1}});
    const auto rs = rank_normal_form(s);
    CHECK(rs.rank == 1);
    const MatrixFq nf = rs.left * s * rs.right;
    CHECK(nf == MatrixFq::from_ints(f3, {{1, 0}, {0, 0}}));
  }

  TEST_CASE("lemma sweep") {
    const auto s = lemma_codim_sweep(Field::of_order(2), 2, 5, 1);
    CHECK(s.pass());
    CHECK(s.rank_cases > 0);
  }

  TEST_CASE("classification") {
    CHECK_THROWS_AS(classify_fourpart(std::vector<int>{1, 1, 1}, Field::of_order(2)), InvalidInput);
    const auto c = classify_fourpart(std::vector<int>{1, 1, 1, 1}, Field::of_order(2));
    CHECK(c.pass());
    CHECK(c.group_order == 64);
    CHECK(c.entries.size() == c.class_count);
    const auto d = classify_fourpart(std::vector<int>{2, 1, 1, 1}, Field::of_order(2));
    CHECK(d.pass());
    CHECK(d.entries.size() == d.class_count);
  }
}
