#include <doctest.h>

#include <algorithm>
#include <random>

#include "patrep/coadjoint.hpp"
#include "patrep/error.hpp"
#include "patrep/fourpart.hpp"
#include "patrep/polarize.hpp"
#include "support.hpp"

using namespace patrep;
using namespace patrep::test;

TEST_SUITE("polarize") {
  TEST_CASE("bilinear form") {
    const auto G = heisenberg(2);
    const Functional t = dual_unit(G, 3, 1);
    CHECK(bform(G, t, e(G, 1, 2), e(G, 1, 2)) == Fq{0});
    CHECK(bform(G, t, e(G, 1, 2), e(G, 2, 3)) == Fq{1});
    CHECK(bform(G, G.zero_functional(), e(G, 1, 2), e(G, 2, 3)) == Fq{0});
  }

  TEST_CASE("radical of the form is the stabilizer") {
    const auto G = radical({1, 1, 1, 1}, 3);
    for (std::uint64_t i = 0; i < G.order(); i += 37) {
      const Functional t{G.decode(i)};
      CHECK(bform_radical(G, t) == stabilizer_subalgebra(G, t));
    }
  }

  TEST_CASE("associative polarization predicate") {
    const auto G = heisenberg(2);
    CHECK(is_associative_polarization(G, G.zero_functional(), Subalgebra::whole(G)).ok);
    const Functional t = dual_unit(G, 3, 1);
    const auto b = Subalgebra::from_space(G, span_of(G, {e(G, 1, 2), e(G, 1, 3)}));
    CHECK(is_associative_polarization(G, t, b).ok);
    const auto small = Subalgebra::from_space(G, span_of(G, {e(G, 1, 3)}));
    const auto v = is_associative_polarization(G, t, small);
    CHECK_FALSE(v.ok);
    CHECK(v.reasons.size() == 1);
  }

  TEST_CASE("pattern search") {
    const auto G = heisenberg(2);
    const auto b = find_associative_polarization(G, dual_unit(G, 3, 1), Strategy::Pattern);
    REQUIRE(b);
    CHECK(b->pattern);
    CHECK(b->roots == std::vector<int>{static_cast<int>(idx(G, 1, 2)), static_cast<int>(idx(G, 1, 3))});

    const auto U4 = radical({1, 1, 1, 1}, 3);
    const auto w = find_associative_polarization(U4, U4.zero_functional(), Strategy::Pattern);
    REQUIRE(w);
    CHECK(w->dim() == U4.dim());
  }

  TEST_CASE("four-part strategy") {
    const auto G = radical({1, 1, 1, 1}, 2);
    const auto b = find_associative_polarization(G, dual_unit(G, 4, 1), Strategy::FourPart);
    REQUIRE(b);
    CHECK(b->dim() == 4);
    CHECK_FALSE(b->contains(e(G, 1, 2).coords));
    CHECK_FALSE(b->contains(e(G, 3, 4).coords));
  }

  TEST_CASE("exhaustive strategy agrees on dimension") {
    const auto G = radical({1, 1, 1, 1}, 2);
    for (std::uint64_t i = 0; i < G.order(); i += 5) {
      const Functional t{G.decode(i)};
      const auto b = find_associative_polarization(G, t, Strategy::Exhaustive);
      REQUIRE(b);
      CHECK(b->dim() == polarization_dim(G, t));
      CHECK(is_associative_polarization(G, t, *b).ok);
    }
  }

  TEST_CASE("certification") {
    const auto H = heisenberg(2);
    const auto r = certify_good_type(H, default_strategies(H));
    CHECK(r.certified);
    CHECK(r.succeeded == 5);

    const auto A = group_of({{1, 3}, {2, 3}}, 3, 3);
    const auto ra = certify_good_type(A, default_strategies(A));
    CHECK(ra.certified);
    for (const auto& e : ra.entries) CHECK(e.polarization->dim() == A.dim());

    const auto U = radical({1, 1, 1, 1}, 2);
    const std::vector<Strategy> only{Strategy::FourPart};
    CHECK(certify_good_type(U, only).certified);
  }

  TEST_CASE("fibers and polarization group orbits") {
    const auto Z = heisenberg(2);
    const auto fz = l_fiber(Z, Z.zero_functional(), Subalgebra::whole(Z));
    CHECK(fz.size() == 1);

    for (int q : {2, 3}) {
      const auto G = heisenberg(q);
      const Functional t = dual_unit(G, 3, 1);
      const auto b = Subalgebra::from_space(G, span_of(G, {e(G, 1, 2), e(G, 1, 3)}));
      const auto fiber = l_fiber(G, t, b);
      CHECK(fiber.size() == static_cast<std::size_t>(q));
      CHECK(fiber == polarization_group_orbit(G, t, b, PolarizationGroup::Associative));
    }
  }

  TEST_CASE("fiber preconditions") {
    const auto G = heisenberg(2);
    CHECK_THROWS_AS(l_fiber(G, dual_unit(G, 3, 1), Subalgebra::whole(G)), StructureError);
  }

  TEST_CASE("exponential and logarithm") {
    const auto G = heisenberg(5);
    CHECK(exp_map(G, G.zero()) == G.identity());
    const AlgebraElement a = G.add(e(G, 1, 2), e(G, 2, 3));
    GroupElement want = G.identity();
    want.coords[idx(G, 1, 2)] = Fq{1};
    want.coords[idx(G, 2, 3)] = Fq{1};
    want.coords[idx(G, 1, 3)] = Fq{3};
    CHECK(exp_map(G, a) == want);

    const auto U4 = radical({1, 1, 1, 1}, 5);
    std::mt19937_64 rng(3);
    for (int k = 0; k < 50; ++k) {
      AlgebraElement v = U4.zero();
      for (auto& c : v.coords) c = Fq{static_cast<std::uint16_t>(rng() % 5)};
      CHECK(log_map(U4, exp_map(U4, v)) == v);
    }
    CHECK_THROWS_AS(exp_map(heisenberg(3), e(heisenberg(3), 1, 2)), CharacteristicError);
  }
}
