#include "patrep/induce.hpp"

#include <algorithm>
#include <set>

#include "patrep/error.hpp"
#include "patrep/parallel.hpp"

namespace patrep {

namespace {

std::uint64_t pow_u64(std::uint64_t base, std::size_t e) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

void check_context(const ClassContext& ctx) {
  if (!ctx.group) throw StructureError("class context has no group");
}

}  // namespace

ClassContext ClassContext::build(const PatternGroup& G, const Limits& limits) {
  G.order_within(limits.group_cap, "character computations");
  ClassContext ctx;
  ctx.group = &G;
  ctx.classes = conjugacy_classes(G, limits);
  ctx.inverse = ctx.classes.inverse_classes(G);
  return ctx;
}

Character trivial_character(const ClassContext& ctx) {
  check_context(ctx);
  Character c;
  c.group = ctx.G().describe();
  c.values.assign(ctx.count(), CycloValue::integer(ctx.G().field().p(), 1));
  return c;
}

LinearCharacter::LinearCharacter(const PatternGroup& G, Functional t, Subalgebra b, PolarizationGroup kind)
    : G_(G), t_(std::move(t)), b_(std::move(b)), kind_(kind) {
  if (t_.coords.size() != G.dim()) throw StructureError("functional does not belong to " + G.describe());
  if (kind_ == PolarizationGroup::Associative) {
    if (!b_.mult_closed) throw NotACharacter("1 + b is not a group: b is not multiplicatively closed");
    if (!annihilates_square(G, t_, b_.space)) throw NotACharacter("lambda_T does not vanish on b^2");
  } else {
    if (G.field().p() <= G.n()) throw CharacteristicError("exp(b) needs p > n");
    if (!is_lie_closed(G, b_.space)) throw NotACharacter("b is not a Lie subalgebra");
    if (!is_isotropic(G, t_, b_.space)) throw NotACharacter("lambda_T does not vanish on [b, b]");
  }
}

bool LinearCharacter::in_domain(const GroupElement& g) const {
  if (kind_ == PolarizationGroup::Associative) return b_.contains(g.coords);
  return b_.contains(log_map(G_, g).coords);
}

int LinearCharacter::exponent(const GroupElement& g) const {
  if (!in_domain(g)) throw InvalidInput("element outside the domain of eta");
  const AlgebraElement x = kind_ == PolarizationGroup::Associative ? AlgebraElement{g.coords} : log_map(G_, g);
  return G_.field().trace(G_.pair(t_, x));
}

CycloValue LinearCharacter::operator()(const GroupElement& g) const {
  return CycloValue::zeta_power(G_.field().p(), exponent(g));
}

std::uint64_t LinearCharacter::domain_order() const {
  return pow_u64(static_cast<std::uint64_t>(G_.q()), b_.dim());
}

Character induced_character(const ClassContext& ctx, const Functional& t, const Subalgebra& b,
                            PolarizationGroup kind, const Limits& limits) {
  check_context(ctx);
  const PatternGroup& G = ctx.G();
  const std::uint64_t total = G.order_within(limits.group_cap, "induced_character");
  const LinearCharacter eta(G, t, b, kind);
  const int p = G.field().p();
  const std::size_t ncl = ctx.count();

  const std::size_t chunks = std::max(1u, limits.threads);
  std::vector<std::vector<std::int64_t>> counts(chunks, std::vector<std::int64_t>(ncl * p, 0));
  parallel_for(chunks, limits.threads, [&](std::size_t k) {
    const std::uint64_t lo = total * k / chunks, hi = total * (k + 1) / chunks;
    GroupElement g{VectorFq(G.dim())};
    auto& mine = counts[k];
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      G.decode(idx, g.coords);
      if (!eta.in_domain(g)) continue;
      ++mine[ctx.classes.label[idx] * p + eta.exponent(g)];
    }
  });
  for (std::size_t k = 1; k < chunks; ++k)
    for (std::size_t i = 0; i < ncl * p; ++i) counts[0][i] += counts[k][i];

  const std::uint64_t porder = eta.domain_order();
  Character chi;
  chi.group = G.describe();
  chi.values.reserve(ncl);
  for (std::size_t c = 0; c < ncl; ++c) {
    const std::span<const std::int64_t> row(counts[0].data() + c * p, p);
    const auto centralizer = static_cast<std::int64_t>(total / ctx.classes.sizes[c]);
    chi.values.push_back(
        CycloValue::from_exponent_counts(p, row).scaled(centralizer).divided_exact(static_cast<std::int64_t>(porder)));
  }
  return chi;
}

CycloValue induced_value_at(const PatternGroup& G, const LinearCharacter& eta, const GroupElement& g,
                            const Limits& limits) {
  const std::uint64_t total = G.order_within(limits.group_cap, "induced_value_at");
  const int p = G.field().p();
  std::vector<std::int64_t> counts(p, 0);
  VectorFq x(G.dim()), xi(G.dim()), tmp(G.dim());
  GroupElement h{VectorFq(G.dim())};
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    G.decode(idx, x);
    G.inverse_into(x, xi);
    G.mul_into(x, g.coords, tmp);
    G.mul_into(tmp, xi, h.coords);
    if (eta.in_domain(h)) ++counts[eta.exponent(h)];
  }
  return CycloValue::from_exponent_counts(p, counts).divided_exact(static_cast<std::int64_t>(eta.domain_order()));
}

Character induced_character_reference(const ClassContext& ctx, const Functional& t, const Subalgebra& b,
                                      PolarizationGroup kind, const Limits& limits) {
  check_context(ctx);
  const PatternGroup& G = ctx.G();
  const std::uint64_t total = G.order_within(limits.group_cap, "induced_character_reference");
  if (total * ctx.count() > limits.search_cap * 64)
    throw ResourceLimit("reference induction needs |G| * #classes = " + std::to_string(total * ctx.count()) +
                        " steps");
  const LinearCharacter eta(G, t, b, kind);
  Character chi;
  chi.group = G.describe();
  chi.values.resize(ctx.count(), CycloValue(G.field().p()));
  parallel_for(ctx.count(), limits.threads, [&](std::size_t c) {
    chi.values[c] = induced_value_at(G, eta, GroupElement{G.decode(ctx.classes.reps[c])}, limits);
  });
  return chi;
}

std::int64_t inner_product(const ClassContext& ctx, const Character& a, const Character& b) {
  check_context(ctx);
  const std::string name = ctx.G().describe();
  if (a.group != name || b.group != name || a.values.size() != ctx.count() || b.values.size() != ctx.count())
    throw StructureError("inner product of characters on different groups");
  CycloValue sum(ctx.G().field().p());
  for (std::size_t c = 0; c < ctx.count(); ++c)
    sum += (a.values[c] * b.values[c].conj()).scaled(static_cast<std::int64_t>(ctx.classes.sizes[c]));
  if (!sum.is_integer()) throw NotACharacter("inner product is not rational: " + sum.to_string());
  const std::int64_t v = sum.to_integer();
  const auto order = static_cast<std::int64_t>(ctx.classes.group_order);
  if (v % order != 0) throw NotACharacter("inner product " + std::to_string(v) + "/" + std::to_string(order) +
                                          " is not an integer");
  return v / order;
}

bool OrbitMethodReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const OrbitMethodCheck& c) { return c.ok; });
}

OrbitMethodReport verify_orbit_method(const ClassContext& ctx, const Functional& t, const Limits& limits) {
  check_context(ctx);
  const PatternGroup& G = ctx.G();
  OrbitMethodReport rep;
  auto add = [&](std::string claim, bool ok, std::string detail) {
    rep.checks.push_back({std::move(claim), ok, std::move(detail)});
  };

  const Orbit orbit = orbit_of(G, t, true, limits);
  const auto pols = all_associative_polarizations(G, t, 2, limits);
  if (pols.empty()) {
    add("T has an associative polarization", false, "exhaustive search found none");
    return rep;
  }
  const Character chi = induced_character(ctx, t, pols[0], PolarizationGroup::Associative, limits);

  std::uint64_t d2 = static_cast<std::uint64_t>(chi.degree()) * static_cast<std::uint64_t>(chi.degree());
  add("degree equals sqrt of the orbit size", d2 == orbit.size,
      "degree " + std::to_string(chi.degree()) + ", orbit size " + std::to_string(orbit.size));

  const std::int64_t norm = inner_product(ctx, chi, chi);
  add("induced character is irreducible", norm == 1, "<chi, chi> = " + std::to_string(norm));

  if (pols.size() >= 2) {
    const Character chi2 = induced_character(ctx, t, pols[1], PolarizationGroup::Associative, limits);
    add("two associative polarizations give the same character", chi2 == chi,
        pols[0].describe(G) + " vs " + pols[1].describe(G));
  } else {
    add("two associative polarizations give the same character", true, "only one polarization exists");
  }

  // A fixed walk through the generators moves T inside its orbit.
  GroupElement g = G.identity();
  for (const auto& s : G.generators()) g = G.mul(g, s);
  const Functional t2 = coadjoint_act(G, g, t);
  const auto pol2 = all_associative_polarizations(G, t2, 1, limits);
  if (pol2.empty()) {
    add("functionals in the same orbit give the same character", false, "no polarization for Ad*(g) T");
  } else {
    const Character chi_same = induced_character(ctx, t2, pol2[0], PolarizationGroup::Associative, limits);
    add("functionals in the same orbit give the same character", chi_same == chi, "");
  }

  // The least functional outside the orbit that has a polarization.
  const std::set<Functional> members(orbit.elements->begin(), orbit.elements->end());
  const std::uint64_t total = G.order_within(limits.group_cap, "verify_orbit_method");
  bool compared = false;
  for (std::uint64_t idx = 0; idx < total && !compared; ++idx) {
    Functional u{G.decode(idx)};
    if (members.count(u)) continue;
    const auto pu = all_associative_polarizations(G, u, 1, limits);
    if (pu.empty()) continue;
    const Character other = induced_character(ctx, u, pu[0], PolarizationGroup::Associative, limits);
    add("functionals in different orbits give different characters", !(other == chi),
        "compared against functional index " + std::to_string(idx));
    compared = true;
  }
  if (!compared) add("functionals in different orbits give different characters", true, "T spans the only orbit");
  return rep;
}

}  // namespace patrep
