#include "patrep/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "patrep/error.hpp"

namespace patrep {

MatrixFq::MatrixFq(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols) {}

MatrixFq MatrixFq::identity(FieldPtr field, std::size_t n) {
  MatrixFq m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Fq{1};
  return m;
}

MatrixFq MatrixFq::from_ints(FieldPtr field, const std::vector<std::vector<long long>>& rows) {
  const std::size_t nc = rows.empty() ? 0 : rows.front().size();
  MatrixFq m(field, rows.size(), nc);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != nc) throw DimensionError("ragged matrix literal");
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = field->from_int(rows[r][c]);
  }
  return m;
}

bool MatrixFq::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Fq x) { return x.is_zero(); });
}

MatrixFq MatrixFq::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  MatrixFq b(field_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void MatrixFq::set_block(std::size_t r0, std::size_t c0, const MatrixFq& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

void MatrixFq::append_row(std::span<const Fq> values) {
  if (rows_ == 0 && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) throw DimensionError("appended row has wrong length");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

std::string MatrixFq::to_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    out << (r ? ";" : "");
    for (std::size_t c = 0; c < cols_; ++c) out << (c ? " " : "") << field_->to_string((*this)(r, c));
  }
  out << ']';
  return out.str();
}

namespace {

const Field& common_field(const MatrixFq& a, const MatrixFq& b) {
  if (a.field_ptr() != b.field_ptr() && a.field().describe() != b.field().describe())
    throw StructureError("matrices over different fields");
  return a.field();
}

}  // namespace

MatrixFq operator*(const MatrixFq& a, const MatrixFq& b) {
  const Field& f = common_field(a, b);
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  MatrixFq c(a.field_ptr(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Fq x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = f.add(c(i, j), f.mul(x, b(k, j)));
    }
  return c;
}

MatrixFq operator+(const MatrixFq& a, const MatrixFq& b) {
  const Field& f = common_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("matrix sum shape mismatch");
  MatrixFq c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = f.add(a(i, j), b(i, j));
  return c;
}

MatrixFq operator-(const MatrixFq& a) { return scaled(a, a.field().neg(a.field().one())); }

MatrixFq operator-(const MatrixFq& a, const MatrixFq& b) { return a + (-b); }

MatrixFq transpose(const MatrixFq& a) {
  MatrixFq t(a.field_ptr(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

MatrixFq scaled(const MatrixFq& a, Fq s) {
  MatrixFq c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a.field().mul(s, a(i, j));
  return c;
}

RrefResult rref(const MatrixFq& m) {
  const Field& f = m.field();
  MatrixFq a = m;
  RrefResult res;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    const Fq inv = f.inv(a(row, col));
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) = f.mul(inv, a(row, j));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Fq factor = f.neg(a(r, col));
      for (std::size_t j = col; j < a.cols(); ++j) a(r, j) = f.add(a(r, j), f.mul(factor, a(row, j)));
    }
    res.pivots.push_back(col);
    ++row;
  }
  res.rank = row;
  res.rref = a.block(0, 0, row, a.cols());
  return res;
}

std::size_t rank(const MatrixFq& m) { return rref(m).rank; }

SubspaceFq::SubspaceFq(FieldPtr field, std::size_t ambient)
    : field_(field), ambient_(ambient), basis_(field, 0, ambient) {}

SubspaceFq SubspaceFq::span(const MatrixFq& generators) {
  SubspaceFq s(generators.field_ptr(), generators.cols());
  auto r = rref(generators);
  s.basis_ = std::move(r.rref);
  s.pivots_ = std::move(r.pivots);
  return s;
}

SubspaceFq SubspaceFq::span(FieldPtr field, std::size_t ambient, const std::vector<VectorFq>& vectors) {
  MatrixFq g(field, 0, ambient);
  for (const auto& v : vectors) g.append_row(v);
  return span(g);
}

SubspaceFq SubspaceFq::whole(FieldPtr field, std::size_t ambient) {
  return span(MatrixFq::identity(std::move(field), ambient));
}

VectorFq SubspaceFq::reduce(std::span<const Fq> v) const {
  if (v.size() != ambient_) throw DimensionError("vector length does not match ambient dimension");
  const Field& f = *field_;
  VectorFq r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Fq c = r[pivots_[i]];
    if (c.is_zero()) continue;
    const Fq factor = f.neg(c);
    auto row = basis_.row(i);
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) r[j] = f.add(r[j], f.mul(factor, row[j]));
  }
  return r;
}

bool SubspaceFq::contains(std::span<const Fq> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](Fq x) { return x.is_zero(); });
}

bool SubspaceFq::contains(const SubspaceFq& other) const { return patrep::contains(*this, other); }

VectorFq SubspaceFq::coordinates(std::span<const Fq> v) const {
  if (!contains(v)) throw StructureError("vector is not in the subspace");
  VectorFq c(dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

VectorFq SubspaceFq::vector_from(std::span<const Fq> coords) const {
  if (coords.size() != dim()) throw DimensionError("coordinate vector has wrong length");
  const Field& f = *field_;
  VectorFq v(ambient_);
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i].is_zero()) continue;
    auto row = basis_.row(i);
    for (std::size_t j = 0; j < ambient_; ++j) v[j] = f.add(v[j], f.mul(coords[i], row[j]));
  }
  return v;
}

void SubspaceFq::for_each_vector(const std::function<void(const VectorFq&)>& visit) const {
  const int q = field_->q();
  VectorFq coords(dim());
  while (true) {
    visit(vector_from(coords));
    std::size_t i = coords.size();
    while (i > 0) {
      --i;
      if (coords[i].v + 1 < q) {
        ++coords[i].v;
        break;
      }
      coords[i].v = 0;
      if (i == 0) return;
    }
    if (coords.empty()) return;
  }
}

SubspaceFq kernel(const MatrixFq& m) {
  const Field& f = m.field();
  auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  MatrixFq gens(m.field_ptr(), 0, m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorFq v(m.cols());
    v[free] = f.one();
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = f.neg(r.rref(i, free));
    gens.append_row(v);
  }
  return SubspaceFq::span(gens);
}

SubspaceFq row_space(const MatrixFq& m) { return SubspaceFq::span(m); }

SubspaceFq column_space(const MatrixFq& m) { return SubspaceFq::span(transpose(m)); }

namespace {

void check_compatible(const SubspaceFq& a, const SubspaceFq& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionError("subspaces live in ambient spaces of different dimension");
}

}  // namespace

SubspaceFq subspace_sum(const SubspaceFq& a, const SubspaceFq& b) {
  check_compatible(a, b);
  MatrixFq g = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) g.append_row(b.basis().row(i));
  return SubspaceFq::span(g);
}

SubspaceFq intersect(const SubspaceFq& a, const SubspaceFq& b) {
  check_compatible(a, b);
  if (a.dim() == 0 || b.dim() == 0) return SubspaceFq(a.field_ptr(), a.ambient_dim());
  // Kernel of [A; B]^T gives the relations sum c_i A_i + sum d_j B_j = 0.
  MatrixFq stacked = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
  SubspaceFq relations = kernel(transpose(stacked));
  std::vector<VectorFq> gens;
  for (std::size_t r = 0; r < relations.dim(); ++r) {
    auto rel = relations.basis().row(r);
    gens.push_back(a.vector_from(rel.subspan(0, a.dim())));
  }
  return SubspaceFq::span(a.field_ptr(), a.ambient_dim(), gens);
}

bool contains(const SubspaceFq& a, const SubspaceFq& b) {
  check_compatible(a, b);
  for (std::size_t i = 0; i < b.dim(); ++i)
    if (!a.contains(b.basis().row(i))) return false;
  return true;
}

SolveResult solve(const MatrixFq& m, std::span<const Fq> b) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side has wrong length");
  const Field& f = m.field();
  MatrixFq aug(m.field_ptr(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols()) = b[i];
  auto r = rref(aug);
  SolveResult res{std::nullopt, kernel(m)};
  if (!r.pivots.empty() && r.pivots.back() == m.cols()) return res;
  VectorFq x(m.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.rref(i, m.cols());
  (void)f;
  res.particular = std::move(x);
  return res;
}

std::size_t for_each_subspace(const FieldPtr& field, std::size_t ambient, std::size_t dim,
                              const std::function<bool(const MatrixFq&)>& visit) {
  if (dim > ambient) return 0;
  const int q = field->q();
  std::size_t visited = 0;
  std::vector<std::size_t> piv(dim);
  for (std::size_t i = 0; i < dim; ++i) piv[i] = i;
  while (true) {
    // Free positions for this pivot pattern.
    std::vector<bool> is_pivot(ambient, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = piv[i] + 1; j < ambient; ++j)
        if (!is_pivot[j]) free.emplace_back(i, j);
    MatrixFq m(field, dim, ambient);
    for (std::size_t i = 0; i < dim; ++i) m(i, piv[i]) = Fq{1};
    std::vector<int> digits(free.size(), 0);
    while (true) {
      for (std::size_t t = 0; t < free.size(); ++t)
        m(free[t].first, free[t].second) = Fq{static_cast<std::uint16_t>(digits[t])};
      ++visited;
      if (!visit(m)) return visited;
      std::size_t t = free.size();
      bool carry = true;
      while (carry && t > 0) {
        --t;
        if (++digits[t] < q) carry = false;
        else digits[t] = 0;
      }
      if (carry) break;
    }
    // Next pivot combination in lexicographic order.
    std::size_t i = dim;
    while (i > 0 && piv[i - 1] == ambient - dim + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < dim; ++j) piv[j] = piv[j - 1] + 1;
  }
  return visited;
}

unsigned long long count_subspaces(int q, std::size_t ambient, std::size_t dim, unsigned long long cap) {
  if (dim > ambient) return 0;
  const unsigned long long sat = cap + 1;
  // table[m][k] via [m,k] = [m-1,k-1] + q^k [m-1,k], saturating.
  std::vector<std::vector<unsigned long long>> t(ambient + 1, std::vector<unsigned long long>(dim + 1, 0));
  for (std::size_t m = 0; m <= ambient; ++m) t[m][0] = 1;
  for (std::size_t m = 1; m <= ambient; ++m)
    for (std::size_t k = 1; k <= std::min(m, dim); ++k) {
      unsigned long long qk = 1;
      for (std::size_t i = 0; i < k && qk < sat; ++i) qk *= static_cast<unsigned long long>(q);
      unsigned __int128 v = static_cast<unsigned __int128>(qk) * t[m - 1][k] + t[m - 1][k - 1];
      t[m][k] = v > sat ? sat : static_cast<unsigned long long>(v);
    }
  return t[ambient][dim];
}

}  // namespace patrep
