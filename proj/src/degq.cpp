#include "patrep/degq.hpp"

#include <algorithm>
#include <set>

#include "patrep/coadjoint.hpp"
#include "patrep/error.hpp"
#include "patrep/oracle.hpp"
#include "patrep/parallel.hpp"

namespace patrep {

namespace {

std::string coords_text(const PatternGroup& G, const Functional& t) {
  std::string s;
  for (Fq x : t.coords) s += (s.empty() ? "" : ",") + G.field().to_string(x);
  return "(" + s + ")";
}

// Candidate removed roots for Y following the two cases on the support of Y
// inside D^#.
std::vector<Root> case_removals(const PatternGroup& G, const Functional& y) {
  const ClosedRootSet& d = G.roots();
  std::vector<Root> support;
  for (std::size_t r = 0; r < G.dim(); ++r)
    if (!d.is_primitive(r) && !y.coords[r].is_zero()) support.push_back(d[r]);
  std::vector<Root> out;
  if (support.size() == 1) {
    const Root st = support[0];
    std::vector<int> mids;
    for (int r = st.i + 1; r < st.j; ++r)
      if (d.contains(st.i, r) && d.contains(r, st.j)) mids.push_back(r);
    if (mids.size() == 1) out.push_back({st.i, mids[0]});
  } else if (support.size() == 2) {
    // Entries (s, t) and (k, m) with s < k < t < m, (s,k), (k,t), (t,m) in D.
    for (int swap = 0; swap < 2; ++swap) {
      const Root a = support[swap], b = support[1 - swap];
      const int s = a.i, t = a.j, k = b.i, m = b.j;
      if (s < k && k < t && t < m && d.contains(s, k) && d.contains(k, t) && d.contains(t, m))
        out.push_back({k, t});
    }
  }
  return out;
}

std::optional<Subalgebra> removal_subalgebra(const PatternGroup& G, const Functional& y, Root removed) {
  const ClosedRootSet& d = G.roots();
  const int pos = d.index_of(removed.i, removed.j);
  if (pos < 0 || !y.coords[static_cast<std::size_t>(pos)].is_zero()) return std::nullopt;
  std::vector<Root> kept;
  std::vector<int> idx;
  for (std::size_t r = 0; r < G.dim(); ++r)
    if (static_cast<int>(r) != pos) {
      kept.push_back(d[r]);
      idx.push_back(static_cast<int>(r));
    }
  if (!is_closed(kept, d.n())) return std::nullopt;
  Subalgebra b = Subalgebra::from_roots(G, idx);
  if (!annihilates_square(G, y, b.space)) return std::nullopt;
  return b;
}

}  // namespace

std::vector<Q2Representative> q2_orbit_representatives(const PatternGroup& G, const Limits& limits) {
  const OrbitPartition part = all_orbits(G, limits);
  const std::uint64_t q2 = static_cast<std::uint64_t>(G.q()) * static_cast<std::uint64_t>(G.q());
  std::vector<std::size_t> chosen;
  for (std::size_t k = 0; k < part.orbits.size(); ++k)
    if (part.orbits[k].size == q2) chosen.push_back(k);

  std::vector<Q2Representative> out(chosen.size());
  parallel_for(chosen.size(), limits.threads, [&](std::size_t k) {
    const Orbit o = orbit_of(G, part.orbits[chosen[k]].representative, true, limits);
    // Options sorted by (removed root, Y); orbit elements are already sorted.
    std::vector<std::pair<Root, Functional>> options;
    for (const Functional& y : *o.elements)
      for (Root rm : case_removals(G, y))
        if (removal_subalgebra(G, y, rm)) options.emplace_back(rm, y);
    if (options.empty())
      throw ProofCaseViolation("no element of the size-q^2 orbit of " + coords_text(G, o.representative) + " on " +
                               G.describe() + " fits the one-entry or two-entry case");
    std::sort(options.begin(), options.end());
    Q2Representative& r = out[k];
    r.orbit_min = o.elements->front();
    r.removed = options.front().first;
    r.y = options.front().second;
    r.b = *removal_subalgebra(G, r.y, r.removed);
    r.options = options.size();
    if (options.size() > 1) r.alternative = options.back();
  });
  return out;
}

DegqReport degq_census(const PatternGroup& G, const Limits& limits) {
  const ClassContext ctx = ClassContext::build(G, limits);
  DegqReport rep;
  const auto reps = q2_orbit_representatives(G, limits);
  rep.entries.resize(reps.size());
  Limits inner = limits;
  inner.threads = 1;
  parallel_for(reps.size(), limits.threads, [&](std::size_t k) {
    DegqEntry& e = rep.entries[k];
    e.rep = reps[k];
    e.character = induced_character(ctx, e.rep.y, e.rep.b, PolarizationGroup::Associative, inner);
    e.degree = e.character.degree();
    e.norm = inner_product(ctx, e.character, e.character);
    if (e.rep.alternative) {
      const auto& [rm, y] = *e.rep.alternative;
      const auto b = removal_subalgebra(G, y, rm);
      e.choice_independent =
          b && induced_character(ctx, y, *b, PolarizationGroup::Associative, inner) == e.character;
    }
  });
  rep.census_count = rep.entries.size();
  rep.all_degree_q = rep.all_irreducible = rep.choice_independent = true;
  std::set<std::vector<CycloValue>> distinct;
  for (const auto& e : rep.entries) {
    rep.all_degree_q &= e.degree == G.q();
    rep.all_irreducible &= e.norm == 1;
    rep.choice_independent &= e.choice_independent;
    distinct.insert(e.character.values);
  }
  rep.pairwise_distinct = distinct.size() == rep.entries.size();
  const DegreeMultiplicities dm = degree_multiplicities(G, limits);
  rep.oracle_m1 = dm.m.size() > 1 ? dm.m[1] : 0;
  return rep;
}

}  // namespace patrep
