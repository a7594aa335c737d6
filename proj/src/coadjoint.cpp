#include "patrep/coadjoint.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "patrep/error.hpp"

namespace patrep {

namespace {

void check_member(const PatternGroup& G, const VectorFq& v, const char* what) {
  if (v.size() != G.dim()) throw StructureError(std::string(what) + " does not belong to " + G.describe());
}

std::uint64_t pow_q(int q, std::size_t e) {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    r *= static_cast<unsigned>(q);
    if (r > (static_cast<unsigned __int128>(1) << 62)) return 0;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

CoadjointActor::CoadjointActor(const PatternGroup& G)
    : G_(G), n_(static_cast<std::size_t>(G.n())), gm_(n_ * n_), gi_(n_ * n_), tm_(n_ * n_), tmp_(n_ * n_) {}

void CoadjointActor::act(std::span<const Fq> g, std::span<const Fq> g_inv, std::span<const Fq> t,
                         std::span<Fq> out) {
  const Field& f = G_.field();
  const auto& roots = G_.roots();
  std::fill(gm_.begin(), gm_.end(), Fq{});
  std::fill(gi_.begin(), gi_.end(), Fq{});
  std::fill(tm_.begin(), tm_.end(), Fq{});
  for (std::size_t i = 0; i < n_; ++i) gm_[i * n_ + i] = gi_[i * n_ + i] = f.one();
  for (std::size_t r = 0; r < G_.dim(); ++r) {
    const std::size_t i = roots[r].i - 1, j = roots[r].j - 1;
    gm_[i * n_ + j] = g[r];
    gi_[i * n_ + j] = g_inv[r];
    tm_[j * n_ + i] = t[r];
  }
  // tmp = T g^{-1}
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t c = 0; c < n_; ++c) {
      Fq s{};
      for (std::size_t b = 0; b <= c; ++b) {
        const Fq x = tm_[a * n_ + b];
        if (!x.is_zero()) s = f.add(s, f.mul(x, gi_[b * n_ + c]));
      }
      tmp_[a * n_ + c] = s;
    }
  // out_r = (g tmp)_{j,i}
  for (std::size_t r = 0; r < G_.dim(); ++r) {
    const std::size_t i = roots[r].i - 1, j = roots[r].j - 1;
    Fq s{};
    for (std::size_t a = j; a < n_; ++a) {
      const Fq x = gm_[j * n_ + a];
      if (!x.is_zero()) s = f.add(s, f.mul(x, tmp_[a * n_ + i]));
    }
    out[r] = s;
  }
}

Functional coadjoint_act(const PatternGroup& G, const GroupElement& g, const Functional& t) {
  check_member(G, g.coords, "group element");
  check_member(G, t.coords, "functional");
  // Full matrix model: project g T g^{-1} onto g_{-D}.
  const MatrixFq gm = G.to_matrix(g);
  const MatrixFq gi = G.to_matrix(G.inverse(g));
  return G.project_to_dual(gm * G.to_matrix(t) * gi);
}

SubspaceFq stabilizer_subalgebra(const PatternGroup& G, const Functional& t) {
  check_member(G, t.coords, "functional");
  const std::size_t d = G.dim();
  const MatrixFq tm = G.to_matrix(t);
  // Column r holds the image of the basis vector e_r under X -> [[X, T]].
  MatrixFq map(G.field_ptr(), d, d);
  for (std::size_t r = 0; r < d; ++r) {
    const MatrixFq x = G.to_matrix(G.unit(r, G.field().one()));
    const Functional img = G.project_to_dual(x * tm - tm * x);
    for (std::size_t s = 0; s < d; ++s) map(s, r) = img.coords[s];
  }
  return kernel(map);
}

Orbit orbit_of(const PatternGroup& G, const Functional& t, bool enumerate, const Limits& limits) {
  check_member(G, t.coords, "functional");
  Orbit o;
  o.representative = t;
  o.stab_dim = stabilizer_subalgebra(G, t).dim();
  o.size = pow_q(G.q(), G.dim() - o.stab_dim);
  if (!enumerate) return o;
  if (o.size == 0 || o.size > limits.orbit_cap)
    throw ResourceLimit("orbit of size q^" + std::to_string(G.dim() - o.stab_dim) + " exceeds orbit cap");

  CoadjointActor actor(G);
  std::vector<VectorFq> gens, gens_inv;
  for (const auto& g : G.generators()) {
    gens.push_back(g.coords);
    gens_inv.push_back(G.inverse(g).coords);
  }
  std::unordered_set<std::uint64_t> seen;
  std::vector<Functional> members{t};
  const bool indexable = G.order() != 0;
  auto key = [&](const VectorFq& v) { return G.encode(v); };
  std::set<VectorFq> seen_big;  // only when indices overflow
  auto insert = [&](const VectorFq& v) {
    return indexable ? seen.insert(key(v)).second : seen_big.insert(v).second;
  };
  insert(t.coords);
  VectorFq next(G.dim());
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (std::size_t k = 0; k < gens.size(); ++k) {
      actor.act(gens[k], gens_inv[k], members[head].coords, next);
      if (insert(next)) {
        if (members.size() >= limits.orbit_cap) throw ResourceLimit("orbit BFS exceeded orbit cap");
        members.push_back(Functional{next});
      }
    }
  }
  if (members.size() != o.size)
    throw InternalInvariantViolation("enumerated orbit size " + std::to_string(members.size()) +
                                     " differs from q^codim = " + std::to_string(o.size));
  std::sort(members.begin(), members.end());
  o.representative = t;
  o.elements = std::move(members);
  return o;
}

OrbitPartition all_orbits(const PatternGroup& G, const Limits& limits) {
  const std::uint64_t total = G.order_within(limits.sweep_cap, "all_orbits");
  OrbitPartition part;
  constexpr std::uint32_t kUnset = 0xffffffffu;
  part.label.assign(total, kUnset);

  CoadjointActor actor(G);
  std::vector<VectorFq> gens, gens_inv;
  for (const auto& g : G.generators()) {
    gens.push_back(g.coords);
    gens_inv.push_back(G.inverse(g).coords);
  }
  VectorFq cur(G.dim()), next(G.dim());
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (part.label[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(part.orbits.size());
    queue.assign(1, start);
    part.label[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      G.decode(queue[head], cur);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        actor.act(gens[k], gens_inv[k], cur, next);
        const std::uint64_t idx = G.encode(next);
        if (part.label[idx] == kUnset) {
          part.label[idx] = id;
          queue.push_back(idx);
        }
      }
    }
    Orbit o;
    o.representative = Functional{G.decode(start)};
    o.stab_dim = stabilizer_subalgebra(G, o.representative).dim();
    o.size = pow_q(G.q(), G.dim() - o.stab_dim);
    if (o.size != queue.size())
      throw InternalInvariantViolation("orbit of " + std::to_string(start) + " has " +
                                       std::to_string(queue.size()) + " elements, expected " +
                                       std::to_string(o.size));
    part.orbits.push_back(std::move(o));
  }
  return part;
}

ClassPartition conjugacy_classes(const PatternGroup& G, const Limits& limits) {
  const std::uint64_t total = G.order_within(limits.sweep_cap, "conjugacy_classes");
  ClassPartition cp;
  cp.group_order = total;
  constexpr std::uint32_t kUnset = 0xffffffffu;
  cp.label.assign(total, kUnset);
  std::vector<VectorFq> gens, gens_inv;
  for (const auto& g : G.generators()) {
    gens.push_back(g.coords);
    gens_inv.push_back(G.inverse(g).coords);
  }
  VectorFq cur(G.dim()), tmp(G.dim()), next(G.dim());
  std::vector<std::uint64_t> queue;
  for (std::uint64_t start = 0; start < total; ++start) {
    if (cp.label[start] != kUnset) continue;
    const auto id = static_cast<std::uint32_t>(cp.reps.size());
    queue.assign(1, start);
    cp.label[start] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      G.decode(queue[head], cur);
      for (std::size_t k = 0; k < gens.size(); ++k) {
        G.mul_into(gens[k], cur, tmp);
        G.mul_into(tmp, gens_inv[k], next);
        const std::uint64_t idx = G.encode(next);
        if (cp.label[idx] == kUnset) {
          cp.label[idx] = id;
          queue.push_back(idx);
        }
      }
    }
    cp.reps.push_back(start);
    cp.sizes.push_back(queue.size());
  }
  return cp;
}

std::vector<std::uint32_t> ClassPartition::inverse_classes(const PatternGroup& G) const {
  std::vector<std::uint32_t> inv(count());
  VectorFq g(G.dim()), gi(G.dim());
  for (std::size_t c = 0; c < count(); ++c) {
    G.decode(reps[c], g);
    G.inverse_into(g, gi);
    inv[c] = label[G.encode(gi)];
  }
  return inv;
}

}  // namespace patrep
