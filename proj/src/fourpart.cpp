#include "patrep/fourpart.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "patrep/error.hpp"
#include "patrep/parallel.hpp"

namespace patrep {

namespace {

MatrixFq& pick(BlockFunctional& t, int i, int j) {
  if (i == 2 && j == 1) return t.t21;
  if (i == 3 && j == 1) return t.t31;
  if (i == 3 && j == 2) return t.t32;
  if (i == 4 && j == 1) return t.t41;
  if (i == 4 && j == 2) return t.t42;
  if (i == 4 && j == 3) return t.t43;
  throw InvalidInput("no block T_" + std::to_string(i) + std::to_string(j));
}

void check_parts(const PatternGroup& G, const Partition4& parts) {
  const auto d = detect_fourpart(G.roots());
  if (!d || *d != parts) throw StructureError(G.describe() + " is not the 4-block radical of the given partition");
}

MatrixFq empty_rows(const FieldPtr& f, std::size_t cols) { return MatrixFq(f, 0, cols); }

// Inverse of a square invertible matrix via rref of [M | I].
MatrixFq inverse_matrix(const MatrixFq& m) {
  const std::size_t n = m.rows();
  MatrixFq aug(m.field_ptr(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, MatrixFq::identity(m.field_ptr(), n));
  const RrefResult r = rref(aug);
  if (r.rank != n || (n > 0 && r.pivots.back() >= n)) throw InternalInvariantViolation("matrix is not invertible");
  return r.rref.block(0, n, n, n);
}

MatrixFq from_columns(const FieldPtr& f, std::size_t rows, const std::vector<VectorFq>& cols) {
  MatrixFq m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

VectorFq column(const MatrixFq& m, std::size_t c) {
  VectorFq v(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) v[r] = m(r, c);
  return v;
}

VectorFq apply(const MatrixFq& m, const VectorFq& v) {
  const Field& f = m.field();
  VectorFq out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] = f.add(out[r], f.mul(m(r, c), v[c]));
  return out;
}

// Appends unit vectors until the list spans F^dim.
void extend_to_basis(const FieldPtr& f, std::size_t dim, std::vector<VectorFq>& vecs) {
  SubspaceFq acc = SubspaceFq::span(f, dim, vecs);
  for (std::size_t k = 0; k < dim && acc.dim() < dim; ++k) {
    VectorFq e(dim);
    e[k] = f->one();
    if (acc.contains(e)) continue;
    vecs.push_back(e);
    acc = SubspaceFq::span(f, dim, vecs);
  }
}

// Rows of m written as A * s + R with R reduced against rowspace(s).
MatrixFq split_rows(const MatrixFq& m, const MatrixFq& s) {
  const SubspaceFq rs = row_space(s);
  const MatrixFq st = transpose(s);
  MatrixFq a(m.field_ptr(), m.rows(), s.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const VectorFq rem = rs.reduce(m.row(r));
    VectorFq target(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) target[c] = m.field().sub(m(r, c), rem[c]);
    const SolveResult sol = solve(st, target);
    if (!sol.particular) throw InternalInvariantViolation("row projection is not in the row space");
    for (std::size_t c = 0; c < s.rows(); ++c) a(r, c) = (*sol.particular)[c];
  }
  return a;
}

// Codimension of the solution space of a homogeneous system given by rows.
struct System {
  FieldPtr field;
  std::size_t unknowns = 0;
  std::vector<VectorFq> rows;
  std::size_t codim() const {
    if (unknowns == 0 || rows.empty()) return 0;
    MatrixFq m(field, 0, unknowns);
    for (const auto& r : rows) m.append_row(r);
    return rank(m);
  }
};

// {X (a x b) : L X = 0, X R = 0} for L (l x a) and R (b x c).
std::size_t two_sided_codim(const FieldPtr& f, const MatrixFq& l, const MatrixFq& r, std::size_t a, std::size_t b) {
  System sys{f, a * b, {}};
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < b; ++j) {
      VectorFq row(a * b);
      for (std::size_t k = 0; k < a; ++k) row[k * b + j] = l(i, k);
      sys.rows.push_back(std::move(row));
    }
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) {
      VectorFq row(a * b);
      for (std::size_t k = 0; k < b; ++k) row[i * b + k] = r(k, j);
      sys.rows.push_back(std::move(row));
    }
  return sys.codim();
}

// {(X, Y) : S X = Y U, K X = 0, Y K' = 0}, X (a x b), Y (c x e); S is c x a,
// U is e x b, K is k x a, K' is e x k'. Unknowns ordered X then Y.
std::size_t coupled_codim(const FieldPtr& f, const MatrixFq& s, const MatrixFq& u, const MatrixFq& k,
                          const MatrixFq& kp, std::size_t a, std::size_t b, std::size_t c, std::size_t e) {
  const Field& F = *f;
  const std::size_t nx = a * b, ny = c * e;
  System sys{f, nx + ny, {}};
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < b; ++j) {
      VectorFq row(nx + ny);
      for (std::size_t t = 0; t < a; ++t) row[t * b + j] = F.add(row[t * b + j], s(i, t));
      for (std::size_t t = 0; t < e; ++t) row[nx + i * e + t] = F.sub(row[nx + i * e + t], u(t, j));
      sys.rows.push_back(std::move(row));
    }
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < b; ++j) {
      VectorFq row(nx + ny);
      for (std::size_t t = 0; t < a; ++t) row[t * b + j] = k(i, t);
      sys.rows.push_back(std::move(row));
    }
  for (std::size_t i = 0; i < c; ++i)
    for (std::size_t j = 0; j < kp.cols(); ++j) {
      VectorFq row(nx + ny);
      for (std::size_t t = 0; t < e; ++t) row[nx + i * e + t] = kp(t, j);
      sys.rows.push_back(std::move(row));
    }
  return sys.codim();
}

bool is_rank_normal(const MatrixFq& u, std::size_t r) {
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) {
      const bool want_one = i == j && i < r;
      if (want_one ? u(i, j).v != 1 : !u(i, j).is_zero()) return false;
    }
  return true;
}

bool spans_disjoint(const MatrixFq& t31, const MatrixFq& t41, const MatrixFq& t42) {
  return intersect(row_space(t31), row_space(t41)).dim() == 0 &&
         intersect(column_space(t42), column_space(t41)).dim() == 0;
}

GroupElement block_element(const PatternGroup& G, const Partition4& parts, int bi, int bj, const MatrixFq& x) {
  GroupElement g = G.identity();
  for (std::size_t a = 0; a < x.rows(); ++a)
    for (std::size_t c = 0; c < x.cols(); ++c)
      g.coords[block_root(G, parts, bi, bj, static_cast<int>(a), static_cast<int>(c))] = x(a, c);
  return g;
}

}  // namespace

BlockFunctional BlockFunctional::zero(const FieldPtr& field, const Partition4& parts) {
  BlockFunctional t;
  t.parts = parts;
  for (int i = 2; i <= 4; ++i)
    for (int j = 1; j < i; ++j) pick(t, i, j) = MatrixFq(field, parts[i - 1], parts[j - 1]);
  return t;
}

BlockFunctional BlockFunctional::from_functional(const PatternGroup& G, const Partition4& parts,
                                                 const Functional& t) {
  check_parts(G, parts);
  BlockFunctional b = zero(G.field_ptr(), parts);
  for (int i = 2; i <= 4; ++i)
    for (int j = 1; j < i; ++j) {
      MatrixFq& m = pick(b, i, j);
      for (int c = 0; c < parts[i - 1]; ++c)
        for (int a = 0; a < parts[j - 1]; ++a) m(c, a) = t.coords[block_root(G, parts, j, i, a, c)];
    }
  return b;
}

Functional BlockFunctional::to_functional(const PatternGroup& G) const {
  check_parts(G, parts);
  Functional t = G.zero_functional();
  for (int i = 2; i <= 4; ++i)
    for (int j = 1; j < i; ++j) {
      const MatrixFq& m = block(i, j);
      for (int c = 0; c < parts[i - 1]; ++c)
        for (int a = 0; a < parts[j - 1]; ++a) t.coords[block_root(G, parts, j, i, a, c)] = m(c, a);
    }
  return t;
}

MatrixFq& BlockFunctional::block(int i, int j) { return pick(*this, i, j); }
const MatrixFq& BlockFunctional::block(int i, int j) const {
  return pick(const_cast<BlockFunctional&>(*this), i, j);
}

std::optional<Partition4> detect_fourpart(const ClosedRootSet& d) {
  const int n = d.n();
  for (int a = 1; a <= n - 3; ++a)
    for (int b = 1; a + b <= n - 2; ++b)
      for (int c = 1; a + b + c <= n - 1; ++c) {
        const Partition4 parts{a, b, c, n - a - b - c};
        if (parabolic_radical(parts) == d) return parts;
      }
  return std::nullopt;
}

int block_offset(const Partition4& parts, int b) {
  int off = 0;
  for (int k = 1; k < b; ++k) off += parts[k - 1];
  return off;
}

int block_root(const PatternGroup& G, const Partition4& parts, int bi, int bj, int a, int c) {
  const int r = G.roots().index_of(block_offset(parts, bi) + a + 1, block_offset(parts, bj) + c + 1);
  if (r < 0) throw InternalInvariantViolation("block entry outside D");
  return r;
}

bool is_normalized(const BlockFunctional& t) { return spans_disjoint(t.t31, t.t41, t.t42); }

NormalizedRepresentative normalize_representative(const PatternGroup& G, const BlockFunctional& t,
                                                  const Limits& limits) {
  check_parts(G, t.parts);
  NormalizedRepresentative out;
  const Functional start = t.to_functional(G);

  // X34 = -A with T31 = A T41 + R clears the part of rowspace(T31) inside
  // rowspace(T41); T41 is untouched.
  const GroupElement g1 = block_element(G, t.parts, 3, 4, -split_rows(t.t31, t.t41));
  const Functional t1 = coadjoint_act(G, g1, start);
  const BlockFunctional b1 = BlockFunctional::from_functional(G, t.parts, t1);
  // X12 = B with T42 = T41 B + R, on columns; T31 is untouched.
  const MatrixFq bt = split_rows(transpose(b1.t42), transpose(b1.t41));
  const GroupElement g2 = block_element(G, t.parts, 1, 2, transpose(bt));
  const Functional t2 = coadjoint_act(G, g2, t1);
  out.t = BlockFunctional::from_functional(G, t.parts, t2);
  out.witness = G.mul(g2, g1);
  out.iterations = 1;
  if (is_normalized(out.t) && out.t.t41 == t.t41) return out;

  // Fallback: walk the orbit until a normalized functional turns up.
  out.used_fallback = true;
  std::map<VectorFq, GroupElement> seen{{start.coords, G.identity()}};
  std::vector<VectorFq> queue{start.coords};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Functional cur{queue[head]};
    const BlockFunctional bc = BlockFunctional::from_functional(G, t.parts, cur);
    if (is_normalized(bc) && bc.t41 == t.t41) {
      out.t = bc;
      out.witness = seen.at(cur.coords);
      out.iterations = head + 1;
      return out;
    }
    const GroupElement w = seen.at(cur.coords);
    for (const auto& s : G.generators()) {
      Functional nxt = coadjoint_act(G, s, cur);
      if (seen.count(nxt.coords)) continue;
      if (seen.size() >= limits.orbit_cap) throw ResourceLimit("normalization walk exceeds orbit cap");
      seen.emplace(nxt.coords, G.mul(s, w));
      queue.push_back(std::move(nxt.coords));
    }
  }
  throw ConstructionFailed("no normalized functional in the orbit");
}

std::size_t stab_codim_formula(const Partition4& parts, std::size_t r31, std::size_t r41, std::size_t r42) {
  const auto n1 = static_cast<std::size_t>(parts[0]), n2 = static_cast<std::size_t>(parts[1]),
             n3 = static_cast<std::size_t>(parts[2]), n4 = static_cast<std::size_t>(parts[3]);
  // Normalized shapes: rowspace(T31) + rowspace(T41) is direct inside F^n1,
  // colspace(T42) + colspace(T41) is direct inside F^n4.
  if (r31 > std::min(n3, n1) || r42 > std::min(n4, n2) || r41 > std::min(n1, n4) || r31 + r41 > n1 ||
      r42 + r41 > n4)
    throw InvalidInput("ranks (" + std::to_string(r31) + "," + std::to_string(r41) + "," + std::to_string(r42) +
                       ") are not realizable by a normalized functional");
  return 2 * (n3 * r41 + n2 * r41 + n2 * r31 + n3 * r42 - r31 * r42);
}

Subalgebra build_bT(const PatternGroup& G, const BlockFunctional& t) {
  check_parts(G, t.parts);
  if (!is_normalized(t)) throw NotNormalized("rowspace(T31) or colspace(T42) meets the span of T41");
  const auto& n = t.parts;
  std::vector<VectorFq> rows;
  auto coord = [&](int bi, int bj, int a, int c) { return block_root(G, n, bi, bj, a, c); };
  // Y23 T31 = 0: n2 x n1 equations.
  for (int a = 0; a < n[1]; ++a)
    for (int c = 0; c < n[0]; ++c) {
      VectorFq row(G.dim());
      for (int b = 0; b < n[2]; ++b) row[coord(2, 3, a, b)] = t.t31(b, c);
      rows.push_back(std::move(row));
    }
  // T42 Y23 = 0: n4 x n3.
  for (int a = 0; a < n[3]; ++a)
    for (int c = 0; c < n[2]; ++c) {
      VectorFq row(G.dim());
      for (int b = 0; b < n[1]; ++b) row[coord(2, 3, b, c)] = t.t42(a, b);
      rows.push_back(std::move(row));
    }
  // T41 Y12 = 0: n4 x n2.
  for (int a = 0; a < n[3]; ++a)
    for (int c = 0; c < n[1]; ++c) {
      VectorFq row(G.dim());
      for (int b = 0; b < n[0]; ++b) row[coord(1, 2, b, c)] = t.t41(a, b);
      rows.push_back(std::move(row));
    }
  // Y34 T41 = 0: n3 x n1.
  for (int a = 0; a < n[2]; ++a)
    for (int c = 0; c < n[0]; ++c) {
      VectorFq row(G.dim());
      for (int b = 0; b < n[3]; ++b) row[coord(3, 4, a, b)] = t.t41(b, c);
      rows.push_back(std::move(row));
    }
  MatrixFq m(G.field_ptr(), 0, G.dim());
  for (const auto& r : rows) m.append_row(r);
  return Subalgebra::from_space(G, kernel(m));
}

RankNormalForm rank_normal_form(const MatrixFq& m) {
  const FieldPtr& f = m.field_ptr();
  const RrefResult rr = rref(m);
  std::vector<VectorFq> right_cols, left_cols;
  for (std::size_t p : rr.pivots) {
    VectorFq e(m.cols());
    e[p] = f->one();
    right_cols.push_back(e);
    left_cols.push_back(column(m, p));
  }
  const SubspaceFq ker = kernel(m);
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    const auto row = ker.basis().row(r);
    right_cols.emplace_back(row.begin(), row.end());
  }
  extend_to_basis(f, m.rows(), left_cols);
  RankNormalForm out;
  out.rank = rr.rank;
  out.right = from_columns(f, m.cols(), right_cols);
  out.left = inverse_matrix(from_columns(f, m.rows(), left_cols));
  if (!is_rank_normal(out.left * m * out.right, out.rank))
    throw InternalInvariantViolation("rank normal form check failed");
  return out;
}

LemmaCodim lemma_codim(LemmaPart part, const MatrixFq& t31, const MatrixFq& t42, const std::optional<MatrixFq>& t41) {
  const FieldPtr& f = t31.field_ptr();
  const std::size_t n1 = t31.cols(), n3 = t31.rows(), n2 = t42.cols(), n4 = t42.rows();
  const std::size_t r31 = rank(t31), r42 = rank(t42);
  LemmaCodim out;

  if (part == LemmaPart::One) {
    out.closed_form = n3 * r42 + n2 * r31 - r31 * r42;
    out.brute_force = two_sided_codim(f, t42, t31, n2, n3);
    // X = R42 X' L31 turns the system into U42 X' = 0, X' U31 = 0.
    const RankNormalForm a = rank_normal_form(t42), b = rank_normal_form(t31);
    out.reduced_form = two_sided_codim(f, a.left * t42 * a.right, b.left * t31 * b.right, n2, n3);
    return out;
  }

  if (!t41) throw InvalidInput("part two needs T41");
  const MatrixFq& m41 = *t41;
  if (m41.rows() != n4 || m41.cols() != n1) throw DimensionError("T41 must be n4 x n1");
  if (!spans_disjoint(t31, m41, t42))
    throw InvalidInput("part two needs rowspace(T31) and rowspace(T41), colspace(T42) and colspace(T41) disjoint");
  const std::size_t r41 = rank(m41);
  out.closed_form = n2 * r41 + n3 * r41 + n2 * r31 + n3 * r42 - r31 * r42;
  out.brute_force = coupled_codim(f, t31, t42, m41, m41, n1, n2, n3, n4);

  // P1: first r41 columns from ker T31 completing ker T41, then ker T41.
  const SubspaceFq k41 = kernel(m41), k31 = kernel(t31);
  std::vector<VectorFq> p1_cols;
  SubspaceFq acc = k41;
  for (std::size_t r = 0; r < k31.dim() && p1_cols.size() < r41; ++r) {
    const auto row = k31.basis().row(r);
    const VectorFq v(row.begin(), row.end());
    if (acc.contains(v)) continue;
    p1_cols.push_back(v);
    MatrixFq g = acc.dim() ? acc.basis() : empty_rows(f, n1);
    g.append_row(v);
    acc = SubspaceFq::span(g);
  }
  if (p1_cols.size() != r41) throw InternalInvariantViolation("ker T31 + ker T41 is not the whole space");
  std::vector<VectorFq> p4_inv_cols;
  for (const auto& v : p1_cols) p4_inv_cols.push_back(apply(m41, v));
  for (std::size_t r = 0; r < k41.dim(); ++r) {
    const auto row = k41.basis().row(r);
    p1_cols.emplace_back(row.begin(), row.end());
  }
  // P4^{-1}: images T41 p_k, then a basis of colspace(T42), then units.
  const SubspaceFq c42 = column_space(t42);
  for (std::size_t r = 0; r < c42.dim(); ++r) {
    const auto row = c42.basis().row(r);
    p4_inv_cols.emplace_back(row.begin(), row.end());
  }
  extend_to_basis(f, n4, p4_inv_cols);
  const MatrixFq p1 = from_columns(f, n1, p1_cols);
  const MatrixFq p4 = inverse_matrix(from_columns(f, n4, p4_inv_cols));
  inverse_matrix(p1);  // throws unless invertible

  const MatrixFq u41 = p4 * m41 * p1, s31full = t31 * p1, s42full = p4 * t42;
  if (!is_rank_normal(u41, r41) || !s31full.block(0, 0, n3, r41).is_zero() ||
      !s42full.block(0, 0, r41, n2).is_zero())
    throw InternalInvariantViolation("change of basis did not reach the reduced shape");
  const MatrixFq s31 = s31full.block(0, r41, n3, n1 - r41);
  const MatrixFq s42 = s42full.block(r41, 0, n4 - r41, n2);
  const RankNormalForm a = rank_normal_form(s31), b = rank_normal_form(s42);
  const MatrixFq u31 = a.left * s31 * a.right, u42 = b.left * s42 * b.right;
  out.reduced_form = n2 * r41 + n3 * r41 +
                     coupled_codim(f, u31, u42, empty_rows(f, n1 - r41), MatrixFq(f, n4 - r41, 0), n1 - r41, n2,
                                   n3, n4 - r41);
  return out;
}

namespace {

MatrixFq random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  MatrixFq m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Fq{static_cast<std::uint16_t>(rng() % f->q())};
  return m;
}

MatrixFq random_of_rank(const FieldPtr& f, std::size_t rows, std::size_t cols, std::size_t r, std::mt19937_64& rng) {
  for (;;) {
    MatrixFq m = random_matrix(f, rows, r, rng) * random_matrix(f, r, cols, rng);
    if (r == 0) return MatrixFq(f, rows, cols);
    if (rank(m) == r) return m;
  }
}

MatrixFq random_invertible(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    MatrixFq m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

}  // namespace

LemmaSweep lemma_codim_sweep(const FieldPtr& field, int max_n, std::uint64_t per_case, std::uint64_t seed) {
  if (max_n < 1) throw InvalidInput("max_n must be positive");
  LemmaSweep sweep;
  std::mt19937_64 rng(seed);
  auto record = [&](const std::string& label, const LemmaCodim& c) {
    ++sweep.instances;
    if (c.agree()) return;
    ++sweep.mismatches;
    if (sweep.mismatch_details.size() < 5)
      sweep.mismatch_details.push_back(label + ": closed " + std::to_string(c.closed_form) + ", brute " +
                                       std::to_string(c.brute_force) + ", reduced " + std::to_string(c.reduced_form));
  };
  const auto m = static_cast<std::size_t>(max_n);
  for (std::size_t n1 = 1; n1 <= m; ++n1)
    for (std::size_t n2 = 1; n2 <= m; ++n2)
      for (std::size_t n3 = 1; n3 <= m; ++n3)
        for (std::size_t n4 = 1; n4 <= m; ++n4) {
          const std::string shape = "(" + std::to_string(n1) + "," + std::to_string(n2) + "," + std::to_string(n3) +
                                    "," + std::to_string(n4) + ")";
          // Part one: T31 is n3 x n1, T42 is n4 x n2, any ranks.
          for (std::size_t r31 = 0; r31 <= std::min(n3, n1); ++r31)
            for (std::size_t r42 = 0; r42 <= std::min(n4, n2); ++r42) {
              ++sweep.rank_cases;
              for (std::uint64_t s = 0; s < per_case; ++s)
                record("part one " + shape,
                       lemma_codim(LemmaPart::One, random_of_rank(field, n3, n1, r31, rng),
                                   random_of_rank(field, n4, n2, r42, rng)));
            }
          // Part two: T41 = C B with B the first r41 rows of a random basis
          // of F^n1 and C the first r41 columns of a random basis of F^n4;
          // T31 uses the next r31 rows, T42 the next r42 columns.
          for (std::size_t r41 = 0; r41 <= std::min(n1, n4); ++r41)
            for (std::size_t r31 = 0; r31 + r41 <= n1 && r31 <= n3; ++r31)
              for (std::size_t r42 = 0; r42 + r41 <= n4 && r42 <= n2; ++r42) {
                ++sweep.rank_cases;
                for (std::uint64_t s = 0; s < per_case; ++s) {
                  const MatrixFq rows = random_invertible(field, n1, rng);
                  const MatrixFq cols = random_invertible(field, n4, rng);
                  const MatrixFq t41 = cols.block(0, 0, n4, r41) * rows.block(0, 0, r41, n1);
                  MatrixFq t31(field, n3, n1), t42(field, n4, n2);
                  if (r31 > 0)
                    t31 = random_of_rank(field, n3, r31, r31, rng) * rows.block(r41, 0, r31, n1);
                  if (r42 > 0)
                    t42 = cols.block(0, r41, n4, r42) * random_of_rank(field, r42, n2, r42, rng);
                  record("part two " + shape, lemma_codim(LemmaPart::Two, t31, t42, t41));
                }
              }
        }
  return sweep;
}

FourPartClassification classify_fourpart(std::span<const int> partition, const FieldPtr& field,
                                         const Limits& limits) {
  if (partition.size() != 4) throw InvalidInput("the 4-part pipeline needs exactly four parts");
  for (int p : partition)
    if (p <= 0) throw InvalidInput("partition parts must be positive");
  const Partition4 parts{partition[0], partition[1], partition[2], partition[3]};
  const PatternGroup G(parabolic_radical(partition), field);
  const ClassContext ctx = ClassContext::build(G, limits);
  const OrbitPartition orbits = all_orbits(G, limits);

  FourPartClassification out;
  out.parts = parts;
  out.group_order = ctx.classes.group_order;
  out.class_count = ctx.count();
  out.entries.resize(orbits.orbits.size());
  Limits inner = limits;
  inner.threads = 1;
  parallel_for(orbits.orbits.size(), limits.threads, [&](std::size_t k) {
    FourPartEntry& e = out.entries[k];
    e.representative = orbits.orbits[k].representative;
    e.orbit_size = orbits.orbits[k].size;
    auto nr = normalize_representative(G, BlockFunctional::from_functional(G, parts, e.representative), inner);
    e.normalized = std::move(nr.t);
    e.witness = std::move(nr.witness);
    e.r31 = rank(e.normalized.t31);
    e.r41 = rank(e.normalized.t41);
    e.r42 = rank(e.normalized.t42);
    e.formula_codim = stab_codim_formula(parts, e.r31, e.r41, e.r42);
    const Functional tn = e.normalized.to_functional(G);
    e.brute_codim = G.dim() - stabilizer_subalgebra(G, tn).dim();
    e.b = build_bT(G, e.normalized);
    e.verdict = is_associative_polarization(G, tn, e.b);
    if (e.verdict.ok) {
      e.character = induced_character(ctx, tn, e.b, PolarizationGroup::Associative, inner);
      e.norm = inner_product(ctx, e.character, e.character);
    }
  });

  out.all_normalized = out.codim_matches = out.all_polarizations = out.all_irreducible = true;
  std::set<std::vector<CycloValue>> distinct;
  std::uint64_t deg2 = 0;
  for (const auto& e : out.entries) {
    out.all_normalized &= is_normalized(e.normalized);
    out.codim_matches &= e.formula_codim == e.brute_codim;
    out.all_polarizations &= e.verdict.ok;
    out.all_irreducible &= e.verdict.ok && e.norm == 1;
    if (e.verdict.ok) {
      distinct.insert(e.character.values);
      deg2 += static_cast<std::uint64_t>(e.character.degree() * e.character.degree());
    }
  }
  out.pairwise_distinct = out.all_polarizations && distinct.size() == out.entries.size();
  out.degree_sum_ok = deg2 == out.group_order;
  out.count_ok = out.entries.size() == out.class_count;
  return out;
}

}  // namespace patrep
