#include "patrep/inducible.hpp"

#include <algorithm>
#include <random>

#include "patrep/coadjoint.hpp"
#include "patrep/error.hpp"
#include "patrep/parallel.hpp"

namespace patrep {

namespace {

bool is_zero(const Functional& t) {
  return std::all_of(t.coords.begin(), t.coords.end(), [](Fq x) { return x.is_zero(); });
}

InduciblePair build(const PatternGroup& G, const Functional& t) {
  const ClosedRootSet& d = G.roots();
  if (G.products().empty() || is_zero(t)) return {t, Subalgebra::whole(G), G.identity()};

  const Field& f = G.field();
  const MZSplit split = decompose_MZ(d);
  const int n = split.n;
  auto coord = [&](const Functional& x, int i, int j) {
    const int r = d.index_of(i, j);
    return r < 0 ? Fq{} : x.coords[static_cast<std::size_t>(r)];
  };

  // Clear T_{n,i}, i descending, with x_{ji}(c) whenever T_{n,j} != 0.
  Functional cur = t;
  GroupElement witness = G.identity();
  for (int i = n - 1; i >= 1; --i) {
    if (!d.contains(i, n) || coord(cur, i, n).is_zero()) continue;
    for (int j = 1; j < i; ++j) {
      if (!d.contains(j, i) || coord(cur, j, n).is_zero()) continue;
      const Fq c = f.div(coord(cur, i, n), coord(cur, j, n));
      const GroupElement g = G.root_element(static_cast<std::size_t>(d.index_of(j, i)), c);
      cur = coadjoint_act(G, g, cur);
      witness = G.mul(g, witness);
      if (!coord(cur, i, n).is_zero()) throw InternalInvariantViolation("clearing move left T_{n,i} nonzero");
      break;
    }
  }

  // Recurse on the restriction to m.
  std::vector<bool> allowed_c(G.dim(), false);
  if (!split.m.empty()) {
    const PatternGroup gm(ClosedRootSet::closure(split.m, n - 1), G.field_ptr());
    if (gm.dim() != split.m.size()) throw InternalInvariantViolation("m is not closed");
    Functional tm = gm.zero_functional();
    for (std::size_t r = 0; r < gm.dim(); ++r) tm.coords[r] = coord(cur, gm.roots()[r].i, gm.roots()[r].j);
    const InduciblePair sub = build(gm, tm);
    GroupElement lifted = G.identity();
    for (std::size_t r = 0; r < gm.dim(); ++r)
      lifted.coords[static_cast<std::size_t>(d.index_of(gm.roots()[r].i, gm.roots()[r].j))] = sub.witness.coords[r];
    cur = coadjoint_act(G, lifted, cur);
    witness = G.mul(lifted, witness);
    if (!sub.b.pattern) throw InternalInvariantViolation("recursive subalgebra is not a pattern subalgebra");
    for (int r : sub.b.roots) {
      const Root& rt = gm.roots()[static_cast<std::size_t>(r)];
      allowed_c[static_cast<std::size_t>(d.index_of(rt.i, rt.j))] = true;
    }
  }

  // n1: (r, n) is forbidden when some (j, r) in D has T_{n,j} != 0. Then
  // close: (r, n) forbidden and (r, j) in m forbid (j, n).
  std::vector<bool> forbidden(static_cast<std::size_t>(n) + 1, false);
  for (const Root& z : split.z)
    for (int j = 1; j < z.i; ++j)
      if (d.contains(j, z.i) && !coord(cur, j, n).is_zero()) forbidden[z.i] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const Root& m : split.m)
      if (forbidden[m.i] && !forbidden[m.j] && d.contains(m.j, n)) forbidden[m.j] = changed = true;
  }

  std::vector<int> roots;
  for (std::size_t r = 0; r < G.dim(); ++r) {
    const Root& rt = d[r];
    if (rt.j == n ? !forbidden[rt.i] : allowed_c[r]) roots.push_back(static_cast<int>(r));
  }
  return {cur, Subalgebra::from_roots(G, roots), witness};
}

}  // namespace

MZSplit decompose_MZ(const ClosedRootSet& d) {
  MZSplit s;
  s.n = u_rank(d);
  for (const Root& r : d.roots()) (r.j == s.n ? s.z : s.m).push_back(r);
  return s;
}

PairVerdict verify_inducible_pair(const PatternGroup& G, const Functional& t, const Subalgebra& b) {
  PairVerdict v;
  if (!is_mult_closed(G, b.space)) v.reasons.push_back("b is not closed under multiplication");
  if (!annihilates_square(G, t, b.space)) v.reasons.push_back("lambda_T does not vanish on b^2");
  const int want = u_rank(G.roots());
  const int got = b.u_rank(G);
  if (got != want) v.reasons.push_back("u-rank of b is " + std::to_string(got) + ", expected " + std::to_string(want));
  v.ok = v.reasons.empty();
  return v;
}

InduciblePair build_inducible_pair(const PatternGroup& G, const Functional& t) {
  if (t.coords.size() != G.dim()) throw StructureError("functional does not belong to " + G.describe());
  InduciblePair p = build(G, t);
  if (!(coadjoint_act(G, p.witness, t) == p.t)) throw InternalInvariantViolation("witness does not reach the representative");
  const PairVerdict v = verify_inducible_pair(G, p.t, p.b);
  if (!v.ok) {
    std::string coords;
    for (Fq x : t.coords) coords += (coords.empty() ? "" : ",") + G.field().to_string(x);
    throw ConstructionFailed("inducible pair for T = (" + coords + ") on " + G.describe() + " with b = " +
                             p.b.describe(G) + ": " + v.reasons.front());
  }
  return p;
}

InducibleSweep inducible_sweep(const PatternGroup& G, std::uint64_t samples, std::uint64_t seed,
                               const Limits& limits) {
  InducibleSweep sweep;
  std::vector<Functional> inputs;
  if (samples == 0) {
    const std::uint64_t total = G.order_within(limits.sweep_cap, "exhaustive inducible sweep");
    sweep.exhaustive = true;
    for (std::uint64_t idx = 0; idx < total; ++idx) inputs.push_back(Functional{G.decode(idx)});
  } else {
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < samples; ++s) {
      Functional t = G.zero_functional();
      for (auto& x : t.coords) x = Fq{static_cast<std::uint16_t>(rng() % static_cast<std::uint64_t>(G.q()))};
      inputs.push_back(std::move(t));
    }
  }
  std::vector<std::string> errors(inputs.size());
  parallel_for(inputs.size(), limits.threads, [&](std::size_t k) {
    try {
      build_inducible_pair(G, inputs[k]);
    } catch (const ConstructionFailed& e) {
      errors[k] = e.what();
    }
  });
  sweep.tested = inputs.size();
  for (const auto& e : errors) {
    if (e.empty()) continue;
    ++sweep.findings;
    if (sweep.finding_details.size() < 5) sweep.finding_details.push_back(e);
  }
  return sweep;
}

}  // namespace patrep
