#include <doctest.h>

#include "patrep/coadjoint.hpp"
#include "patrep/fourpart.hpp"
#include "support.hpp"

using namespace patrep;
using namespace patrep::test;

TEST_SUITE("coadjoint") {
  TEST_CASE("action of root elements") {
    const auto G = heisenberg(2);
    const Functional t = dual_unit(G, 3, 1);
    CHECK(coadjoint_act(G, G.identity(), t) == t);

    Functional want = t;
    want.coords[idx(G, 2, 3)] = Fq{1};
    CHECK(coadjoint_act(G, x(G, 1, 2), t) == want);

    const auto H = heisenberg(3);
    for (int c = 0; c < 3; ++c) {
      Functional w = dual_unit(H, 3, 1);
      w.coords[idx(H, 1, 2)] = H.field().from_int(c);
      CHECK(coadjoint_act(H, x(H, 2, 3, c), dual_unit(H, 3, 1)) == w);
    }
  }

  TEST_CASE("the action is a group action") {
    const auto G = radical({1, 1, 1, 1}, 3);
    const Functional t = dual_unit(G, 4, 1, 2);
    const GroupElement g = G.mul(x(G, 1, 2, 1), x(G, 3, 4, 2));
    const GroupElement h = G.mul(x(G, 2, 3, 1), x(G, 1, 3, 1));
    CHECK(coadjoint_act(G, G.mul(g, h), t) == coadjoint_act(G, g, coadjoint_act(G, h, t)));
  }

  TEST_CASE("stabilizer") {
    const auto G = heisenberg(2);
    CHECK(stabilizer_subalgebra(G, G.zero_functional()).dim() == 3);
    const auto s = stabilizer_subalgebra(G, dual_unit(G, 3, 1));
    CHECK(s.dim() == 1);
    CHECK(s.contains(e(G, 1, 3).coords));

    const auto U4 = radical({1, 1, 1, 1}, 2);
    const std::size_t dim = stabilizer_subalgebra(U4, dual_unit(U4, 4, 1)).dim();
    CHECK(dim == 2);
    CHECK(U4.dim() - dim == stab_codim_formula({1, 1, 1, 1}, 0, 1, 0));
  }

  TEST_CASE("single orbits") {
    const auto G = heisenberg(3);
    CHECK(orbit_of(G, G.zero_functional(), true).size == 1);
    const Orbit o = orbit_of(G, dual_unit(G, 3, 1), true);
    CHECK(o.size == 9);
    REQUIRE(o.elements);
    for (const auto& y : *o.elements) CHECK(y.coords[idx(G, 1, 3)] == Fq{1});

    const auto U4 = radical({1, 1, 1, 1}, 2);
    const Orbit o4 = orbit_of(U4, dual_unit(U4, 4, 1), true);
    CHECK(o4.size == 16);
    CHECK(o4.elements->size() == 16);
  }

  TEST_CASE("orbit partitions") {
    const auto H2 = heisenberg(2);
    const auto p2 = all_orbits(H2);
    REQUIRE(p2.orbits.size() == 5);
    int singletons = 0, big = 0;
    for (const auto& o : p2.orbits) {
      singletons += o.size == 1;
      big += o.size == 4;
    }
    CHECK(singletons == 4);
    CHECK(big == 1);

    CHECK(all_orbits(heisenberg(3)).orbits.size() == 11);
    const auto A = group_of({{1, 3}, {2, 3}}, 3, 3);
    CHECK(all_orbits(A).orbits.size() == 9);
  }

  TEST_CASE("conjugacy classes") {
    CHECK(conjugacy_classes(heisenberg(2)).count() == 5);
    const auto A = group_of({{1, 3}, {2, 3}}, 3, 2);
    CHECK(conjugacy_classes(A).count() == 4);
    const auto U4 = radical({1, 1, 1, 1}, 2);
    CHECK(conjugacy_classes(U4).count() == all_orbits(U4).orbits.size());
  }

  TEST_CASE("partitions do not depend on the worker count") {
    const auto G = radical({1, 1, 1, 1}, 3);
    Limits one, four;
    four.threads = 4;
    const auto a = all_orbits(G, one), b = all_orbits(G, four);
    CHECK(a.label == b.label);
    const auto c = conjugacy_classes(G, one), d = conjugacy_classes(G, four);
    CHECK(c.reps == d.reps);
    CHECK(c.sizes == d.sizes);
  }

  TEST_CASE("sweep caps") {
    Limits tiny;
    tiny.sweep_cap = 16;
    CHECK_THROWS_AS(all_orbits(radical({1, 1, 1, 1}, 2), tiny), ResourceLimit);
  }
}
