#include "patrep/oracle.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "patrep/error.hpp"
#include "patrep/parallel.hpp"

namespace patrep {

namespace mp = boost::multiprecision;

namespace {

void check_classes(const PatternGroup& G, const ClassPartition& classes) {
  if (classes.group_order != G.order() || classes.label.size() != G.order())
    throw StructureError("class partition does not belong to " + G.describe());
}

}  // namespace

ClassFunctionInt commutator_distribution(const PatternGroup& G, const ClassPartition& classes, const Limits& limits) {
  const std::uint64_t total = G.order_within(limits.group_cap, "commutator_distribution");
  check_classes(G, classes);
  const auto inv = classes.inverse_classes(G);
  ClassFunctionInt f;
  f.group = G.describe();
  f.values.assign(classes.count(), 0);
  parallel_for(classes.count(), limits.threads, [&](std::size_t c) {
    const VectorFq g = G.decode(classes.reps[c]);
    VectorFq x(G.dim()), xi(G.dim()), y(G.dim());
    std::int64_t sum = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      G.decode(idx, x);
      G.inverse_into(x, xi);
      G.mul_into(xi, g, y);
      const std::uint32_t k = classes.label[idx];
      if (classes.label[G.encode(y)] == inv[k]) sum += static_cast<std::int64_t>(total / classes.sizes[k]);
    }
    f.values[c] = sum;
  });
  return f;
}

ClassFunctionInt commutator_distribution_bruteforce(const PatternGroup& G, const ClassPartition& classes,
                                                    const Limits& limits) {
  const std::uint64_t total = G.order_within(limits.group_cap, "commutator_distribution_bruteforce");
  check_classes(G, classes);
  if (total > (std::uint64_t{1} << 13)) throw ResourceLimit("|G|^2 commutator sweep limited to |G| <= 2^13");
  const std::size_t chunks = std::max(1u, limits.threads);
  std::vector<std::vector<std::int64_t>> counts(chunks, std::vector<std::int64_t>(classes.count(), 0));
  parallel_for(chunks, limits.threads, [&](std::size_t k) {
    VectorFq x(G.dim()), y(G.dim()), c(G.dim());
    for (std::uint64_t a = total * k / chunks; a < total * (k + 1) / chunks; ++a) {
      G.decode(a, x);
      for (std::uint64_t b = 0; b < total; ++b) {
        G.decode(b, y);
        const GroupElement comm = G.commutator(GroupElement{x}, GroupElement{y});
        ++counts[k][classes.label[G.encode(comm.coords)]];
      }
    }
  });
  ClassFunctionInt f;
  f.group = G.describe();
  f.values.assign(classes.count(), 0);
  for (std::size_t c = 0; c < classes.count(); ++c) {
    std::int64_t s = 0;
    for (const auto& chunk : counts) s += chunk[c];
    const auto size = static_cast<std::int64_t>(classes.sizes[c]);
    if (s % size != 0) throw InternalInvariantViolation("commutator count is not constant on a class");
    f.values[c] = s / size;
  }
  return f;
}

DegreeMultiplicities degree_multiplicities(const PatternGroup& G, const Limits& limits) {
  const std::uint64_t total = G.order_within(limits.group_cap, "degree_multiplicities");
  const ClassPartition classes = conjugacy_classes(G, limits);
  const ClassFunctionInt f = commutator_distribution(G, classes, limits);
  const std::size_t ncl = classes.count();

  // W[m][k] = sum over x in class k of f(x^-1 g_m).
  std::vector<std::int64_t> w(ncl * ncl, 0);
  parallel_for(ncl, limits.threads, [&](std::size_t m) {
    const VectorFq g = G.decode(classes.reps[m]);
    VectorFq x(G.dim()), xi(G.dim()), y(G.dim());
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      G.decode(idx, x);
      G.inverse_into(x, xi);
      G.mul_into(xi, g, y);
      w[m * ncl + classes.label[idx]] += f.values[classes.label[G.encode(y)]];
    }
  });

  // |G| = q^dim; degrees q^i with q^{2i} <= |G|.
  const std::size_t d = G.dim() * static_cast<std::size_t>(G.field().k()) / 2;
  const mp::cpp_int q = G.field().q(), order = total;
  std::vector<mp::cpp_int> h(f.values.begin(), f.values.end());
  std::vector<mp::cpp_rational> moments;  // M_1 .. M_d
  for (std::size_t k = 1; k <= d; ++k) {
    if (k > 1) {
      std::vector<mp::cpp_int> next(ncl);
      for (std::size_t m = 0; m < ncl; ++m)
        for (std::size_t c = 0; c < ncl; ++c) next[m] += h[c] * w[m * ncl + c];
      h = std::move(next);
    }
    moments.emplace_back(h[0], mp::pow(order, static_cast<unsigned>(2 * k - 1)));
  }

  // Rows k = 1..d: sum_i m_i q^{-(2k-2) i} = M_k; last row sum_i m_i q^{2i} = |G|.
  const std::size_t u = d + 1;
  std::vector<std::vector<mp::cpp_rational>> a(u, std::vector<mp::cpp_rational>(u + 1));
  for (std::size_t k = 1; k <= d; ++k) {
    for (std::size_t i = 0; i < u; ++i)
      a[k - 1][i] = mp::cpp_rational(1, mp::pow(q, static_cast<unsigned>((2 * k - 2) * i)));
    a[k - 1][u] = moments[k - 1];
  }
  for (std::size_t i = 0; i < u; ++i) a[d][i] = mp::cpp_rational(mp::pow(q, static_cast<unsigned>(2 * i)));
  a[d][u] = mp::cpp_rational(order);
  for (std::size_t col = 0; col < u; ++col) {
    std::size_t piv = col;
    while (piv < u && a[piv][col] == 0) ++piv;
    if (piv == u) throw InternalInvariantViolation("moment system is singular");
    std::swap(a[piv], a[col]);
    for (std::size_t r = 0; r < u; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const mp::cpp_rational factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c <= u; ++c) a[r][c] -= factor * a[col][c];
    }
  }

  DegreeMultiplicities out;
  out.class_count = ncl;
  out.group_order = total;
  for (const auto& mk : moments) out.moments.push_back(mk.str());
  for (std::size_t i = 0; i < u; ++i) {
    const mp::cpp_rational v = a[i][u] / a[i][i];
    if (mp::denominator(v) != 1 || v < 0)
      throw AssumptionViolated("degree multiplicity of q^" + std::to_string(i) + " solves to " + v.str() +
                               "; the power-of-q degree hypothesis fails on " + G.describe());
    out.m.push_back(static_cast<std::uint64_t>(mp::numerator(v)));
  }
  std::uint64_t sum = 0;
  for (auto m : out.m) sum += m;
  if (sum != ncl) throw InternalInvariantViolation("multiplicities do not sum to the class count");
  return out;
}

CliffordReport clifford_count_check(const PatternGroup& G, const Limits& limits) {
  const std::uint64_t total = G.order_within(limits.group_cap, "clifford_count_check");
  const ClosedRootSet& d = G.roots();
  const int n = u_rank(d);
  std::vector<std::size_t> zpos, mpos;
  for (std::size_t r = 0; r < G.dim(); ++r) (d[r].j == n ? zpos : mpos).push_back(r);
  const std::size_t nz = zpos.size();
  const int q = G.q();
  const Field& f = G.field();

  // M = elements supported off the last column.
  std::vector<GroupElement> mel;
  VectorFq x(G.dim());
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    G.decode(idx, x);
    bool in_m = true;
    for (std::size_t r : zpos) in_m &= x[r].is_zero();
    if (in_m) mel.push_back(GroupElement{x});
  }

  // conj[m] is the nz x nz matrix of z -> m z m^-1 on N = F_q^nz.
  auto conj_matrix = [&](const GroupElement& m) {
    MatrixFq c(G.field_ptr(), nz, nz);
    const GroupElement mi = G.inverse(m);
    for (std::size_t s = 0; s < nz; ++s) {
      const GroupElement img = G.mul(G.mul(m, G.root_element(zpos[s], f.one())), mi);
      for (std::size_t r : mpos)
        if (!img.coords[r].is_zero()) throw InternalInvariantViolation("last-column subgroup is not normal");
      for (std::size_t t = 0; t < nz; ++t) c(t, s) = img.coords[zpos[t]];
    }
    return c;
  };
  std::vector<MatrixFq> act(mel.size());  // a -> C^T a
  parallel_for(mel.size(), limits.threads, [&](std::size_t k) { act[k] = transpose(conj_matrix(mel[k])); });

  std::uint64_t dual = 1;
  for (std::size_t i = 0; i < nz; ++i) dual *= static_cast<std::uint64_t>(q);
  auto encode = [&](const VectorFq& a) {
    std::uint64_t v = 0;
    for (Fq c : a) v = v * static_cast<std::uint64_t>(q) + c.v;
    return v;
  };
  auto decode = [&](std::uint64_t v) {
    VectorFq a(nz);
    for (std::size_t i = nz; i-- > 0;) {
      a[i] = Fq{static_cast<std::uint16_t>(v % static_cast<std::uint64_t>(q))};
      v /= static_cast<std::uint64_t>(q);
    }
    return a;
  };
  auto apply = [&](const MatrixFq& m, const VectorFq& a) {
    VectorFq out(nz);
    for (std::size_t r = 0; r < nz; ++r)
      for (std::size_t c = 0; c < nz; ++c) out[r] = f.add(out[r], f.mul(m(r, c), a[c]));
    return out;
  };

  CliffordReport rep;
  rep.dual_size = dual;
  rep.class_count = conjugacy_classes(G, limits).count();
  std::vector<bool> seen(dual, false);
  std::vector<std::uint64_t> reps;
  std::vector<std::uint64_t> sizes;
  for (std::uint64_t a = 0; a < dual; ++a) {
    if (seen[a]) continue;
    // Orbit under all of M; |M| * |N^| stays small under the group cap.
    std::uint64_t size = 0;
    const VectorFq va = decode(a);
    for (const auto& m : act) {
      const std::uint64_t b = encode(apply(m, va));
      if (!seen[b]) {
        seen[b] = true;
        ++size;
      }
    }
    reps.push_back(a);
    sizes.push_back(size);
  }

  rep.orbits.resize(reps.size());
  parallel_for(reps.size(), limits.threads, [&](std::size_t k) {
    CliffordOrbit& o = rep.orbits[k];
    const VectorFq va = decode(reps[k]);
    for (Fq c : va) o.character.push_back(c.v);
    o.orbit_size = sizes[k];
    std::vector<std::size_t> stab;
    for (std::size_t m = 0; m < act.size(); ++m)
      if (apply(act[m], va) == va) stab.push_back(m);
    o.stabilizer_order = stab.size();
    if (o.stabilizer_order * o.orbit_size != mel.size())
      throw InternalInvariantViolation("orbit-stabilizer count fails on the dual of N");
    std::map<VectorFq, std::size_t> pos;
    for (std::size_t i = 0; i < stab.size(); ++i) pos.emplace(mel[stab[i]].coords, i);
    std::vector<bool> done(stab.size(), false);
    std::vector<GroupElement> inv;
    for (std::size_t s : stab) inv.push_back(G.inverse(mel[s]));
    for (std::size_t i = 0; i < stab.size(); ++i) {
      if (done[i]) continue;
      ++o.stabilizer_classes;
      for (std::size_t s = 0; s < stab.size(); ++s) {
        const GroupElement c = G.mul(G.mul(mel[stab[s]], mel[stab[i]]), inv[s]);
        done[pos.at(c.coords)] = true;
      }
    }
  });
  for (const auto& o : rep.orbits) rep.class_sum += o.stabilizer_classes;
  return rep;
}

}  // namespace patrep
