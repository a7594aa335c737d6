#include <doctest.h>

#include "patrep/coadjoint.hpp"
#include "patrep/error.hpp"
#include "patrep/induce.hpp"
#include "patrep/polarize.hpp"
#include "support.hpp"

using namespace patrep;
using namespace patrep::test;

namespace {

CycloValue value_at(const ClassContext& ctx, const Character& c, const GroupElement& g) {
  return c.values[ctx.classes.label[ctx.G().encode(g.coords)]];
}

}  // namespace

TEST_SUITE("induce") {
  TEST_CASE("linear character on 1 + b") {
    const auto G = heisenberg(2);
    const auto b = Subalgebra::from_space(G, span_of(G, {e(G, 1, 2), e(G, 1, 3)}));
    const LinearCharacter eta(G, dual_unit(G, 3, 1), b);
    CHECK(eta.domain_order() == 4);
    CHECK(eta(x(G, 1, 3)) == CycloValue::integer(2, -1));
    CHECK(eta(G.mul(x(G, 1, 2), x(G, 1, 3))) == eta(x(G, 1, 2)) * eta(x(G, 1, 3)));
    CHECK(eta(G.mul(x(G, 1, 2), x(G, 1, 3))) == CycloValue::integer(2, -1));
    CHECK_FALSE(eta.in_domain(x(G, 2, 3)));
    CHECK_THROWS_AS(LinearCharacter(G, dual_unit(G, 3, 1), Subalgebra::whole(G)), NotACharacter);
  }

  TEST_CASE("zero functional gives the trivial character") {
    const auto G = heisenberg(3);
    const auto ctx = ClassContext::build(G);
    const Character c = induced_character(ctx, G.zero_functional(), Subalgebra::whole(G));
    CHECK(c == trivial_character(ctx));
    CHECK(c.degree() == 1);
    CHECK(inner_product(ctx, c, c) == 1);
  }

  TEST_CASE("Heisenberg degree-2 character") {
    const auto G = heisenberg(2);
    const auto ctx = ClassContext::build(G);
    const auto b = Subalgebra::from_space(G, span_of(G, {e(G, 1, 2), e(G, 1, 3)}));
    const Character c = induced_character(ctx, dual_unit(G, 3, 1), b);
    CHECK(c.degree() == 2);
    CHECK(value_at(ctx, c, x(G, 1, 3)) == CycloValue::integer(2, -2));
    int zeros = 0;
    for (std::size_t k = 0; k < ctx.count(); ++k) zeros += c.values[k] == CycloValue::integer(2, 0);
    CHECK(zeros == 3);
    CHECK(inner_product(ctx, c, c) == 1);
    CHECK(inner_product(ctx, trivial_character(ctx), c) == 0);

    // The other pattern polarization gives the same character.
    const auto b2 = Subalgebra::from_space(G, span_of(G, {e(G, 2, 3), e(G, 1, 3)}));
    CHECK(induced_character(ctx, dual_unit(G, 3, 1), b2) == c);
  }

  TEST_CASE("fast and reference induction agree") {
    for (int q : {2, 3}) {
      const auto G = radical({1, 1, 1, 1}, q);
      const auto ctx = ClassContext::build(G);
      const auto part = all_orbits(G);
      for (std::size_t k = 0; k < part.orbits.size(); k += 3) {
        const Functional& t = part.orbits[k].representative;
        const auto b = find_associative_polarization(G, t, Strategy::Pattern);
        REQUIRE(b);
        CHECK(induced_character(ctx, t, *b) == induced_character_reference(ctx, t, *b));
      }
    }
  }

  TEST_CASE("fourpart degree") {
    const auto G = radical({1, 1, 1, 1}, 2);
    const auto ctx = ClassContext::build(G);
    const Functional t = dual_unit(G, 4, 1);
    const auto b = find_associative_polarization(G, t, Strategy::FourPart);
    REQUIRE(b);
    CHECK(induced_character(ctx, t, *b).degree() == 4);
  }

  TEST_CASE("Ad-conjugate functionals give the same character") {
    const auto G = radical({1, 1, 1, 1}, 3);
    const auto ctx = ClassContext::build(G);
    const Functional t = dual_unit(G, 4, 1, 2);
    const Functional u = coadjoint_act(G, G.mul(x(G, 1, 2, 1), x(G, 3, 4, 2)), t);
    const auto bt = find_associative_polarization(G, t, Strategy::Exhaustive);
    const auto bu = find_associative_polarization(G, u, Strategy::Exhaustive);
    REQUIRE(bt);
    REQUIRE(bu);
    CHECK(induced_character(ctx, t, *bt) == induced_character(ctx, u, *bu));
  }

  TEST_CASE("Heisenberg q=3 size-9 orbits give distinct characters") {
    const auto G = heisenberg(3);
    const auto ctx = ClassContext::build(G);
    std::vector<Character> chars;
    for (int c : {1, 2}) {
      const Functional t = dual_unit(G, 3, 1, c);
      const auto b = find_associative_polarization(G, t, Strategy::Pattern);
      REQUIRE(b);
      chars.push_back(induced_character(ctx, t, *b));
      CHECK(chars.back().degree() == 3);
    }
    CHECK_FALSE(chars[0] == chars[1]);
    CHECK(inner_product(ctx, chars[0], chars[1]) == 0);
  }

  TEST_CASE("exponential induction for p > n") {
    const auto G = radical({1, 1, 1, 1}, 5);
    const auto ctx = ClassContext::build(G);
    const Functional t = dual_unit(G, 4, 1, 3);
    const auto b = find_lie_polarization(G, t, true);
    REQUIRE(b);
    const auto a = find_associative_polarization(G, t, Strategy::FourPart);
    REQUIRE(a);
    CHECK(induced_character(ctx, t, *b, PolarizationGroup::Exponential) == induced_character(ctx, t, *a));
  }

  TEST_CASE("orbit method checks per functional") {
    const auto G = radical({1, 1, 1, 1}, 2);
    const auto ctx = ClassContext::build(G);
    for (const auto& o : all_orbits(G).orbits) {
      const auto r = verify_orbit_method(ctx, o.representative);
      CHECK(r.pass());
    }
  }

  TEST_CASE("group cap") {
    Limits l;
    l.group_cap = 4;
    CHECK_THROWS_AS(ClassContext::build(heisenberg(2), l), ResourceLimit);
  }
}
