#include <doctest.h>

#include "patrep/coadjoint.hpp"
#include "patrep/degq.hpp"
#include "patrep/error.hpp"
#include "patrep/oracle.hpp"
#include "support.hpp"

using namespace patrep;
using namespace patrep::test;

TEST_SUITE("oracle") {
  TEST_CASE("commutator distribution on the Heisenberg group") {
    const auto G = heisenberg(2);
    const auto cls = conjugacy_classes(G);
    const auto f = commutator_distribution(G, cls);
    CHECK(f.values[cls.label[0]] == 40);
    CHECK(f.values[cls.label[G.encode(x(G, 1, 3).coords)]] == 24);
    CHECK(f.values == commutator_distribution_bruteforce(G, cls).values);
    std::int64_t second = 0;
    for (std::size_t k = 0; k < cls.count(); ++k)
      second += static_cast<std::int64_t>(cls.sizes[k]) * f.values[k] * f.values[k];
    CHECK(second == 2176);
  }

  TEST_CASE("commutator distribution on an abelian group") {
    const auto G = group_of({{1, 3}, {2, 3}}, 3, 3);
    const auto cls = conjugacy_classes(G);
    const auto f = commutator_distribution(G, cls);
    CHECK(f.values[cls.label[0]] == 81);
    for (std::size_t k = 0; k < cls.count(); ++k)
      if (cls.reps[k] != 0) CHECK(f.values[k] == 0);
  }

  TEST_CASE("class identity matches brute force") {
    for (const auto& G : {radical({1, 1, 1, 1}, 2), radical({1, 2, 1}, 2), heisenberg(3)}) {
      const auto cls = conjugacy_classes(G);
      CHECK(commutator_distribution(G, cls).values == commutator_distribution_bruteforce(G, cls).values);
    }
  }

  TEST_CASE("degree multiplicities") {
    const auto h = degree_multiplicities(heisenberg(2));
    CHECK(h.m.size() >= 2);
    CHECK(h.m[0] == 4);
    CHECK(h.m[1] == 1);
    const auto a = degree_multiplicities(group_of({{1, 3}, {2, 3}}, 3, 2));
    CHECK(a.m.front() == 4);
    for (std::size_t i = 1; i < a.m.size(); ++i) CHECK(a.m[i] == 0);
    const auto u4 = degree_multiplicities(radical({1, 1, 1, 1}, 2));
    CHECK(u4.m == std::vector<std::uint64_t>{8, 6, 2, 0});
  }

  TEST_CASE("Clifford counting") {
    const auto r = clifford_count_check(heisenberg(2));
    CHECK(r.dual_size == 4);
    CHECK(r.class_sum == 5);
    CHECK(r.pass());
    int singles = 0;
    for (const auto& o : r.orbits) {
      if (o.orbit_size == 1) {
        ++singles;
        CHECK(o.stabilizer_classes == 2);
      } else {
        CHECK(o.orbit_size == 2);
        CHECK(o.stabilizer_classes == 1);
      }
    }
    CHECK(singles == 2);
    CHECK(clifford_count_check(group_of({{1, 3}, {2, 3}}, 3, 3)).pass());
    CHECK(clifford_count_check(radical({1, 1, 1, 1}, 3)).pass());
  }

  TEST_CASE("q^2 orbit representatives") {
    const auto G = heisenberg(2);
    const auto reps = q2_orbit_representatives(G);
    REQUIRE(reps.size() == 1);
    const auto& r = reps[0];
    CHECK(r.y.coords[idx(G, r.removed.i, r.removed.j)] == Fq{0});
    CHECK(r.b.dim() == 2);
    CHECK(q2_orbit_representatives(group_of({{1, 3}, {2, 3}}, 3, 2)).empty());

    const auto U4 = radical({1, 1, 1, 1}, 2);
    for (const auto& q : q2_orbit_representatives(U4)) {
      const auto o = orbit_of(U4, q.orbit_min, true);
      CHECK(std::binary_search(o.elements->begin(), o.elements->end(), q.y));
    }
  }

  TEST_CASE("an orbit outside both cases") {
    // Both nonzero entries of every element sit in the last column, so no
    // element has the s < k < t < m shape. The plain counts still agree.
    const auto G = group_of({{1, 2}, {2, 4}, {3, 4}, {4, 5}}, 5, 2);
    CHECK_THROWS_AS(q2_orbit_representatives(G), ProofCaseViolation);
    std::uint64_t q2 = 0;
    for (const auto& o : all_orbits(G).orbits) q2 += o.size == 4;
    CHECK(q2 == degree_multiplicities(G).m[1]);
  }

  TEST_CASE("degree-q census") {
    const auto h2 = degq_census(heisenberg(2));
    CHECK(h2.census_count == 1);
    CHECK(h2.oracle_m1 == 1);
    CHECK(h2.pass());
    const auto h3 = degq_census(heisenberg(3));
    CHECK(h3.census_count == 2);
    CHECK(h3.pass());
    const auto u4 = degq_census(radical({1, 1, 1, 1}, 2));
    CHECK(u4.census_count == u4.oracle_m1);
    CHECK(u4.pass());
  }
}
