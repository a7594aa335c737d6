#include "patrep/polarize.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "patrep/error.hpp"
#include "patrep/fourpart.hpp"
#include "patrep/parallel.hpp"

namespace patrep {

namespace {

std::vector<AlgebraElement> basis_elements(const SubspaceFq& s) {
  std::vector<AlgebraElement> out;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const auto row = s.basis().row(r);
    out.push_back(AlgebraElement{VectorFq(row.begin(), row.end())});
  }
  return out;
}

void check_space(const PatternGroup& G, const SubspaceFq& s) {
  if (s.ambient_dim() != G.dim()) throw StructureError("subspace does not live in g_D of " + G.describe());
}

// prod[a * d + b] = c when e_a e_b = e_c, else -1.
std::vector<int> product_table(const PatternGroup& G) {
  const std::size_t d = G.dim();
  std::vector<int> t(d * d, -1);
  for (const auto& p : G.products()) t[static_cast<std::size_t>(p.a) * d + p.b] = p.c;
  return t;
}

// Every subspace of dimension `target` containing `rad`, each exactly once.
// visit returns false to stop.
void for_each_superspace(const PatternGroup& G, const SubspaceFq& rad, std::size_t target, const Limits& limits,
                         const std::function<bool(const SubspaceFq&)>& visit) {
  const std::size_t d = G.dim();
  if (target < rad.dim()) return;
  std::vector<std::size_t> free;
  for (std::size_t c = 0, k = 0; c < d; ++c) {
    if (k < rad.pivots().size() && rad.pivots()[k] == c) {
      ++k;
      continue;
    }
    free.push_back(c);
  }
  const std::size_t c = target - rad.dim();
  const auto count = count_subspaces(G.q(), free.size(), c, limits.search_cap);
  if (count > limits.search_cap)
    throw ResourceLimit("polarization search over " + std::to_string(count) + "+ subspaces exceeds search cap");
  for_each_subspace(G.field_ptr(), free.size(), c, [&](const MatrixFq& w) {
    MatrixFq gens = rad.basis();
    if (gens.rows() == 0) gens = MatrixFq(G.field_ptr(), 0, d);
    VectorFq v(d);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      std::fill(v.begin(), v.end(), Fq{});
      for (std::size_t k = 0; k < free.size(); ++k) v[free[k]] = w(r, k);
      gens.append_row(v);
    }
    return visit(SubspaceFq::span(gens));
  });
}

std::optional<Subalgebra> pattern_search(const PatternGroup& G, const Functional& t, const Limits& limits) {
  const std::size_t d = G.dim();
  const std::size_t target = polarization_dim(G, t);
  const auto prod = product_table(G);
  std::vector<int> chosen;
  std::uint64_t nodes = 0;
  std::optional<Subalgebra> found;

  auto compatible = [&](int r) {
    // lambda_T vanishes on e_a e_b for a, b among the chosen roots and r.
    for (int a : chosen) {
      for (int c : {prod[a * d + r], prod[r * d + a]})
        if (c >= 0 && !t.coords[c].is_zero()) return false;
    }
    const int c = prod[r * d + r];
    return c < 0 || t.coords[c].is_zero();
  };
  auto closed = [&] {
    std::vector<bool> in(d, false);
    for (int a : chosen) in[a] = true;
    for (int a : chosen)
      for (int b : chosen) {
        const int c = prod[a * d + b];
        if (c >= 0 && !in[c]) return false;
      }
    return true;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t next) {
    if (found) return;
    if (++nodes > limits.search_cap) throw ResourceLimit("pattern polarization search exceeds search cap");
    if (chosen.size() == target) {
      if (closed()) found = Subalgebra::from_roots(G, chosen);
      return;
    }
    if (d - next < target - chosen.size()) return;
    for (std::size_t r = next; r < d && !found; ++r) {
      if (d - r < target - chosen.size()) break;
      if (!compatible(static_cast<int>(r))) continue;
      chosen.push_back(static_cast<int>(r));
      dfs(r + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return found;
}

std::optional<Subalgebra> fourpart_search(const PatternGroup& G, const Functional& t, const Limits& limits) {
  const auto parts = detect_fourpart(G.roots());
  if (!parts) return std::nullopt;
  const auto nr = normalize_representative(G, BlockFunctional::from_functional(G, *parts, t), limits);
  const Subalgebra bt = build_bT(G, nr.t);
  // Ad*(g) T = T' and b' polarizes T', so g^{-1} b' g polarizes T.
  const MatrixFq gm = G.to_matrix(nr.witness);
  const MatrixFq gi = G.to_matrix(G.inverse(nr.witness));
  std::vector<VectorFq> gens;
  for (const auto& y : basis_elements(bt.space))
    gens.push_back(G.algebra_from_matrix(gi * G.to_matrix(y) * gm).coords);
  return Subalgebra::from_space(G, SubspaceFq::span(G.field_ptr(), G.dim(), gens));
}

std::optional<Subalgebra> exhaustive_search(const PatternGroup& G, const Functional& t, const Limits& limits) {
  std::optional<Subalgebra> found;
  for_each_superspace(G, bform_radical(G, t), polarization_dim(G, t), limits, [&](const SubspaceFq& s) {
    if (annihilates_square(G, t, s) && is_mult_closed(G, s)) {
      found = Subalgebra::from_space(G, s);
      return false;
    }
    return true;
  });
  return found;
}

SubspaceFq products_span(const PatternGroup& G, const SubspaceFq& a, const SubspaceFq& b, bool lie) {
  std::vector<VectorFq> gens;
  const auto ea = basis_elements(a), eb = basis_elements(b);
  for (const auto& x : ea)
    for (const auto& y : eb) gens.push_back(lie ? G.bracket(x, y).coords : G.product(x, y).coords);
  return SubspaceFq::span(G.field_ptr(), G.dim(), gens);
}

// Basis of b adapted to the filtration b = f_1 > f_2 > ... > 0, deepest first.
std::vector<AlgebraElement> adapted_basis(const PatternGroup& G, const SubspaceFq& b, bool lie) {
  std::vector<SubspaceFq> chain{b};
  while (chain.back().dim() > 0) chain.push_back(products_span(G, lie ? b : chain.back(), lie ? chain.back() : b, lie));
  std::vector<AlgebraElement> out;
  SubspaceFq acc(G.field_ptr(), G.dim());
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    for (const auto& v : basis_elements(*it)) {
      if (acc.contains(v.coords)) continue;
      out.push_back(v);
      acc = subspace_sum(acc, SubspaceFq::span(G.field_ptr(), G.dim(), {v.coords}));
    }
  }
  return out;
}

void require_exp_characteristic(const PatternGroup& G) {
  if (G.field().p() <= G.n())
    throw CharacteristicError("exp and log on G_D need p > n (p = " + std::to_string(G.field().p()) +
                              ", n = " + std::to_string(G.n()) + ")");
}

}  // namespace

Subalgebra Subalgebra::from_space(const PatternGroup& G, SubspaceFq space) {
  check_space(G, space);
  Subalgebra s;
  s.space = std::move(space);
  s.mult_closed = is_mult_closed(G, s.space);
  // A subspace is a pattern space when each basis row is a unit vector.
  bool pattern = true;
  std::vector<int> roots;
  for (std::size_t r = 0; r < s.space.dim() && pattern; ++r) {
    std::size_t nonzero = 0;
    for (std::size_t c = 0; c < G.dim(); ++c)
      if (!s.space.basis()(r, c).is_zero()) ++nonzero;
    pattern = nonzero == 1;
    roots.push_back(static_cast<int>(s.space.pivots()[r]));
  }
  s.pattern = pattern;
  if (pattern) s.roots = std::move(roots);
  return s;
}

Subalgebra Subalgebra::from_roots(const PatternGroup& G, std::vector<int> root_indices) {
  std::vector<VectorFq> gens;
  for (int r : root_indices) {
    if (r < 0 || static_cast<std::size_t>(r) >= G.dim()) throw InvalidRoot("root index out of range");
    gens.push_back(G.unit(static_cast<std::size_t>(r), G.field().one()).coords);
  }
  return from_space(G, SubspaceFq::span(G.field_ptr(), G.dim(), gens));
}

Subalgebra Subalgebra::whole(const PatternGroup& G) {
  return from_space(G, SubspaceFq::whole(G.field_ptr(), G.dim()));
}

bool Subalgebra::contains(std::span<const Fq> x) const { return space.contains(x); }

int Subalgebra::u_rank(const PatternGroup& G) const {
  int best = 0;
  for (std::size_t r = 0; r < space.dim(); ++r)
    for (std::size_t c = 0; c < G.dim(); ++c)
      if (!space.basis()(r, c).is_zero()) best = std::max(best, G.roots()[c].j);
  return best;
}

std::string Subalgebra::describe(const PatternGroup& G) const {
  if (pattern) {
    std::string s = "span{";
    for (std::size_t k = 0; k < roots.size(); ++k) {
      const Root& rt = G.roots()[static_cast<std::size_t>(roots[k])];
      s += (k ? ",e" : "e") + std::to_string(rt.i) + std::to_string(rt.j);
    }
    return s + "}";
  }
  return "rowspace" + space.basis().to_string();
}

bool is_mult_closed(const PatternGroup& G, const SubspaceFq& space) {
  check_space(G, space);
  const auto e = basis_elements(space);
  for (const auto& x : e)
    for (const auto& y : e)
      if (!space.contains(G.product(x, y).coords)) return false;
  return true;
}

bool is_lie_closed(const PatternGroup& G, const SubspaceFq& space) {
  check_space(G, space);
  const auto e = basis_elements(space);
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (!space.contains(G.bracket(e[a], e[b]).coords)) return false;
  return true;
}

bool annihilates_square(const PatternGroup& G, const Functional& t, const SubspaceFq& space) {
  check_space(G, space);
  const auto e = basis_elements(space);
  for (const auto& x : e)
    for (const auto& y : e)
      if (!G.pair(t, G.product(x, y)).is_zero()) return false;
  return true;
}

bool is_isotropic(const PatternGroup& G, const Functional& t, const SubspaceFq& space) {
  check_space(G, space);
  const auto e = basis_elements(space);
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b)
      if (!bform(G, t, e[a], e[b]).is_zero()) return false;
  return true;
}

Fq bform(const PatternGroup& G, const Functional& t, const AlgebraElement& x, const AlgebraElement& y) {
  return G.pair(t, G.bracket(x, y));
}

SubspaceFq bform_radical(const PatternGroup& G, const Functional& t) {
  if (t.coords.size() != G.dim()) throw StructureError("functional does not belong to " + G.describe());
  const std::size_t d = G.dim();
  MatrixFq m(G.field_ptr(), d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t s = r + 1; s < d; ++s) {
      const Fq v = bform(G, t, G.unit(r, G.field().one()), G.unit(s, G.field().one()));
      m(r, s) = v;
      m(s, r) = G.field().neg(v);
    }
  return kernel(m);
}

std::size_t polarization_dim(const PatternGroup& G, const Functional& t) {
  return (G.dim() + bform_radical(G, t).dim()) / 2;
}

PolarizationVerdict is_associative_polarization(const PatternGroup& G, const Functional& t, const Subalgebra& b) {
  PolarizationVerdict v;
  if (!is_mult_closed(G, b.space)) v.reasons.push_back("b is not closed under multiplication");
  if (!annihilates_square(G, t, b.space)) v.reasons.push_back("lambda_T does not vanish on b^2");
  const std::size_t want = polarization_dim(G, t);
  if (b.dim() != want)
    v.reasons.push_back("dim b = " + std::to_string(b.dim()) + ", expected " + std::to_string(want));
  v.ok = v.reasons.empty();
  return v;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Pattern: return "pattern";
    case Strategy::FourPart: return "fourpart";
    case Strategy::Exhaustive: return "exhaustive";
  }
  return "?";
}

std::optional<Subalgebra> find_associative_polarization(const PatternGroup& G, const Functional& t,
                                                        Strategy strategy, const Limits& limits) {
  if (t.coords.size() != G.dim()) throw StructureError("functional does not belong to " + G.describe());
  std::optional<Subalgebra> b;
  switch (strategy) {
    case Strategy::Pattern: b = pattern_search(G, t, limits); break;
    case Strategy::FourPart: b = fourpart_search(G, t, limits); break;
    case Strategy::Exhaustive: b = exhaustive_search(G, t, limits); break;
  }
  if (b) {
    const auto v = is_associative_polarization(G, t, *b);
    if (!v.ok)
      throw ConstructionFailed(to_string(strategy) + " strategy produced a non-polarization: " + v.reasons.front());
  }
  return b;
}

std::vector<Subalgebra> all_associative_polarizations(const PatternGroup& G, const Functional& t,
                                                      std::size_t max_count, const Limits& limits) {
  std::vector<Subalgebra> out;
  if (max_count == 0) return out;
  for_each_superspace(G, bform_radical(G, t), polarization_dim(G, t), limits, [&](const SubspaceFq& s) {
    if (annihilates_square(G, t, s) && is_mult_closed(G, s)) out.push_back(Subalgebra::from_space(G, s));
    return out.size() < max_count;
  });
  return out;
}

std::optional<Subalgebra> find_lie_polarization(const PatternGroup& G, const Functional& t,
                                                bool prefer_nonassociative, const Limits& limits) {
  std::optional<Subalgebra> first, nonassoc;
  for_each_superspace(G, bform_radical(G, t), polarization_dim(G, t), limits, [&](const SubspaceFq& s) {
    if (!is_isotropic(G, t, s) || !is_lie_closed(G, s)) return true;
    if (!first) first = Subalgebra::from_space(G, s);
    if (!prefer_nonassociative) return false;
    if (!is_mult_closed(G, s)) {
      nonassoc = Subalgebra::from_space(G, s);
      return false;
    }
    return true;
  });
  return nonassoc ? nonassoc : first;
}

GoodTypeReport certify_good_type(const PatternGroup& G, const std::vector<Strategy>& strategies,
                                 const Limits& limits) {
  const OrbitPartition orbits = all_orbits(G, limits);
  GoodTypeReport report;
  report.entries.resize(orbits.orbits.size());
  parallel_for(orbits.orbits.size(), limits.threads, [&](std::size_t k) {
    CertificationEntry& e = report.entries[k];
    e.representative = orbits.orbits[k].representative;
    e.orbit_size = orbits.orbits[k].size;
    for (Strategy s : strategies) {
      auto b = find_associative_polarization(G, e.representative, s, limits);
      if (b) {
        e.polarization = std::move(b);
        e.strategy = s;
        break;
      }
    }
  });
  for (const auto& e : report.entries)
    if (e.polarization) ++report.succeeded;
  report.certified = report.succeeded == report.entries.size();
  return report;
}

std::vector<Strategy> default_strategies(const PatternGroup& G) {
  std::vector<Strategy> s{Strategy::Pattern};
  if (detect_fourpart(G.roots())) s.push_back(Strategy::FourPart);
  s.push_back(Strategy::Exhaustive);
  return s;
}

std::vector<Functional> l_fiber(const PatternGroup& G, const Functional& t, const Subalgebra& b,
                                PolarizationGroup kind) {
  if (kind == PolarizationGroup::Associative) {
    const auto v = is_associative_polarization(G, t, b);
    if (!v.ok) throw StructureError("not an associative polarization: " + v.reasons.front());
  } else {
    require_exp_characteristic(G);
    if (!is_lie_closed(G, b.space) || !is_isotropic(G, t, b.space) || b.dim() != polarization_dim(G, t))
      throw StructureError("not a Lie polarization");
  }
  // ann(b) = {mu : sum_r mu_r v_r = 0 for all v in b}.
  const SubspaceFq ann = kernel(b.dim() ? b.space.basis() : MatrixFq(G.field_ptr(), 0, G.dim()));
  std::vector<Functional> out;
  ann.for_each_vector([&](const VectorFq& mu) {
    Functional f = t;
    for (std::size_t r = 0; r < G.dim(); ++r) f.coords[r] = G.field().add(f.coords[r], mu[r]);
    out.push_back(std::move(f));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Functional> polarization_group_orbit(const PatternGroup& G, const Functional& t, const Subalgebra& b,
                                                 PolarizationGroup kind, const Limits& limits) {
  const bool lie = kind == PolarizationGroup::Exponential;
  if (lie) require_exp_characteristic(G);
  else if (!b.mult_closed) throw InvalidInput("1 + b is a group only when b is multiplicatively closed");
  std::vector<VectorFq> gens, gens_inv;
  for (const auto& v : adapted_basis(G, b.space, lie))
    for (Fq xi : G.field().prime_basis()) {
      const AlgebraElement x = G.scale(xi, v);
      GroupElement g = lie ? exp_map(G, x) : GroupElement{x.coords};
      gens_inv.push_back(G.inverse(g).coords);
      gens.push_back(std::move(g.coords));
    }
  CoadjointActor actor(G);
  std::set<VectorFq> seen{t.coords};
  std::vector<VectorFq> queue{t.coords};
  VectorFq next(G.dim());
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      actor.act(gens[k], gens_inv[k], queue[head], next);
      if (seen.insert(next).second) {
        if (queue.size() >= limits.orbit_cap) throw ResourceLimit("P-orbit exceeds orbit cap");
        queue.push_back(next);
      }
    }
  std::vector<Functional> out;
  out.reserve(seen.size());
  for (const auto& v : seen) out.push_back(Functional{v});
  return out;
}

GroupElement exp_map(const PatternGroup& G, const AlgebraElement& x) {
  require_exp_characteristic(G);
  const Field& f = G.field();
  AlgebraElement sum = x, power = x;
  Fq fact = f.one();
  for (int m = 2; m < G.n(); ++m) {
    power = G.product(power, x);
    fact = f.mul(fact, f.from_int(m));
    sum = G.add(sum, G.scale(f.inv(fact), power));
  }
  return GroupElement{sum.coords};
}

AlgebraElement log_map(const PatternGroup& G, const GroupElement& g) {
  require_exp_characteristic(G);
  const Field& f = G.field();
  const AlgebraElement y{g.coords};
  AlgebraElement sum = y, power = y;
  for (int m = 2; m < G.n(); ++m) {
    power = G.product(power, y);
    Fq c = f.inv(f.from_int(m));
    if (m % 2 == 0) c = f.neg(c);
    sum = G.add(sum, G.scale(c, power));
  }
  return sum;
}

}  // namespace patrep
