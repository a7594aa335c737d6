#include <doctest.h>

#include "patrep/inducible.hpp"
#include "support.hpp"

using namespace patrep;
using namespace patrep::test;

TEST_SUITE("inducible") {
  TEST_CASE("last column split") {
    const auto s3 = decompose_MZ(ClosedRootSet::full(3));
    CHECK(s3.z == std::vector<Root>{{1, 3}, {2, 3}});
    CHECK(s3.m == std::vector<Root>{{1, 2}});
    const auto s4 = decompose_MZ(ClosedRootSet::full(4));
    CHECK(s4.z.size() == 3);
    CHECK(s4.m.size() == 3);
    const std::vector<Root> one{{1, 4}};
    const auto s = decompose_MZ(ClosedRootSet::closure(one, 4));
    CHECK(s.z == one);
    CHECK(s.m.empty());
  }

  TEST_CASE("base case") {
    const auto G = group_of({{1, 2}}, 2, 3);
    const auto p = build_inducible_pair(G, dual_unit(G, 2, 1));
    CHECK(p.b.dim() == G.dim());
  }

  TEST_CASE("constructed pairs verify") {
    const auto H = heisenberg(2);
    const auto p = build_inducible_pair(H, dual_unit(H, 3, 1));
    CHECK(verify_inducible_pair(H, p.t, p.b).ok);
    CHECK(p.b.u_rank(H) == 3);

    const auto U4 = radical({1, 1, 1, 1}, 2);
    const auto p4 = build_inducible_pair(U4, dual_unit(U4, 4, 1));
    CHECK(verify_inducible_pair(U4, p4.t, p4.b).ok);
    CHECK(p4.b.u_rank(U4) == 4);
  }

  TEST_CASE("pair predicate") {
    const auto G = heisenberg(2);
    const Functional t = dual_unit(G, 3, 1);
    CHECK(verify_inducible_pair(G, G.zero_functional(), Subalgebra::whole(G)).ok);
    const auto b = Subalgebra::from_space(G, span_of(G, {e(G, 2, 3)}));
    CHECK(verify_inducible_pair(G, t, b).ok);
    CHECK_FALSE(verify_inducible_pair(G, t, Subalgebra::whole(G)).ok);
  }

  TEST_CASE("exhaustive sweeps have no findings") {
    const auto s3 = inducible_sweep(heisenberg(2), 0, 1);
    CHECK(s3.exhaustive);
    CHECK(s3.findings == 0);
    const auto G = group_of({{1, 2}, {1, 3}, {1, 4}, {2, 4}, {3, 4}}, 4, 2);
    const auto s = inducible_sweep(G, 0, 1);
    CHECK(s.tested == 32);
    CHECK(s.findings == 0);
  }

  TEST_CASE("random sweeps are reproducible") {
    const auto G = radical({1, 1, 1, 1, 1}, 3);
    const auto a = inducible_sweep(G, 40, 9);
    CHECK(a.findings == 0);
    CHECK(a.tested == 40);
    CHECK_FALSE(a.exhaustive);
  }
}
