#include "patrep/pattern.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "json.hpp"
#include "patrep/error.hpp"

namespace patrep {

namespace {

void check_root(Root r, int n) {
  if (!(1 <= r.i && r.i < r.j && r.j <= n))
    throw InvalidRoot("(" + std::to_string(r.i) + "," + std::to_string(r.j) +
                      ") is not a positive root of Delta_" + std::to_string(n));
}

}  // namespace

ClosedRootSet ClosedRootSet::closure(std::span<const Root> roots, int n) {
  if (n < 1) throw InvalidInput("ambient rank must be >= 1");
  std::set<Root> set;
  for (auto r : roots) {
    check_root(r, n);
    set.insert(r);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Root> cur(set.begin(), set.end());
    for (auto a : cur)
      for (auto b : cur)
        if (a.j == b.i && set.insert(Root{a.i, b.j}).second) grew = true;
  }
  ClosedRootSet d;
  d.n_ = n;
  d.roots_.assign(set.begin(), set.end());
  d.index_.assign(static_cast<std::size_t>(n * n), -1);
  for (std::size_t r = 0; r < d.roots_.size(); ++r)
    d.index_[(d.roots_[r].i - 1) * n + (d.roots_[r].j - 1)] = static_cast<int>(r);
  d.primitive_.assign(d.roots_.size(), true);
  for (std::size_t r = 0; r < d.roots_.size(); ++r) {
    const auto [i, k] = d.roots_[r];
    for (int j = i + 1; j < k; ++j)
      if (d.contains(i, j) && d.contains(j, k)) d.primitive_[r] = false;
  }
  return d;
}

ClosedRootSet ClosedRootSet::full(int n) {
  std::vector<Root> all;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
  return closure(all, n);
}

int ClosedRootSet::index_of(int i, int j) const {
  if (i < 1 || j < 1 || i > n_ || j > n_) return -1;
  return index_[(i - 1) * n_ + (j - 1)];
}

std::vector<Root> ClosedRootSet::primitive() const {
  std::vector<Root> out;
  for (std::size_t r = 0; r < roots_.size(); ++r)
    if (primitive_[r]) out.push_back(roots_[r]);
  return out;
}

std::vector<Root> ClosedRootSet::nonprimitive() const {
  std::vector<Root> out;
  for (std::size_t r = 0; r < roots_.size(); ++r)
    if (!primitive_[r]) out.push_back(roots_[r]);
  return out;
}

std::string ClosedRootSet::to_string() const {
  std::ostringstream out;
  out << "n=" << n_ << ":";
  for (std::size_t r = 0; r < roots_.size(); ++r)
    out << (r ? "," : "") << '(' << roots_[r].i << ',' << roots_[r].j << ')';
  return out.str();
}

bool is_closed(std::span<const Root> roots, int n) {
  std::set<Root> set(roots.begin(), roots.end());
  for (auto r : roots) check_root(r, n);
  for (auto a : set)
    for (auto b : set)
      if (a.j == b.i && !set.count(Root{a.i, b.j})) return false;
  return true;
}

ClosedRootSet parabolic_radical(std::span<const int> partition) {
  if (partition.empty()) throw InvalidInput("empty partition");
  std::vector<int> block;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    if (partition[b] < 1) throw InvalidInput("partition parts must be positive");
    block.insert(block.end(), static_cast<std::size_t>(partition[b]), static_cast<int>(b));
  }
  const int n = static_cast<int>(block.size());
  std::vector<Root> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (block[i - 1] < block[j - 1]) roots.push_back({i, j});
  return ClosedRootSet::closure(roots, n);
}

int u_rank(const ClosedRootSet& d) {
  if (d.empty()) throw InvalidInput("u-rank of an empty root set");
  int m = 0;
  for (auto r : d.roots()) m = std::max(m, r.j);
  return m;
}

PatternGroup::PatternGroup(ClosedRootSet roots, FieldPtr field)
    : roots_(std::move(roots)), field_(std::move(field)) {
  if (roots_.empty()) throw InvalidInput("pattern group with empty root set");
  if (!field_) throw InvalidInput("missing field");
  const auto& rs = roots_.roots();
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b)
      if (rs[a].j == rs[b].i) {
        const int c = roots_.index_of(rs[a].i, rs[b].j);
        if (c < 0) throw InternalInvariantViolation("root set is not closed");
        products_.push_back({static_cast<int>(a), static_cast<int>(b), c});
      }
  // Sorting by the length of the target root lets inverse_into solve in one pass.
  std::stable_sort(products_.begin(), products_.end(), [&](const RootProduct& x, const RootProduct& y) {
    const int lx = rs[x.c].j - rs[x.c].i, ly = rs[y.c].j - rs[y.c].i;
    return lx != ly ? lx < ly : x.c < y.c;
  });

  unsigned __int128 ord = 1;
  for (std::size_t r = 0; r < dim(); ++r) {
    ord *= static_cast<unsigned>(q());
    if (ord > (static_cast<unsigned __int128>(1) << 62)) {
      ord = 0;
      break;
    }
  }
  order_ = static_cast<std::uint64_t>(ord);

  for (std::size_t r = 0; r < dim(); ++r)
    for (Fq xi : field_->prime_basis()) generators_.push_back(root_element(r, xi));
}

std::uint64_t PatternGroup::order_within(std::uint64_t cap, const std::string& what) const {
  if (order_ == 0 || order_ > cap)
    throw ResourceLimit(what + ": q^" + std::to_string(dim()) + " exceeds cap " + std::to_string(cap));
  return order_;
}

AlgebraElement PatternGroup::unit(std::size_t r, Fq value) const {
  AlgebraElement x = zero();
  x.coords.at(r) = value;
  return x;
}

GroupElement PatternGroup::root_element(std::size_t r, Fq value) const {
  GroupElement g = identity();
  g.coords.at(r) = value;
  return g;
}

Functional PatternGroup::functional_unit(std::size_t r, Fq value) const {
  Functional t = zero_functional();
  t.coords.at(r) = value;
  return t;
}

AlgebraElement PatternGroup::add(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement z = zero();
  for (std::size_t r = 0; r < dim(); ++r) z.coords[r] = field_->add(x.coords[r], y.coords[r]);
  return z;
}

AlgebraElement PatternGroup::scale(Fq s, const AlgebraElement& x) const {
  AlgebraElement z = zero();
  for (std::size_t r = 0; r < dim(); ++r) z.coords[r] = field_->mul(s, x.coords[r]);
  return z;
}

void PatternGroup::product_into(std::span<const Fq> x, std::span<const Fq> y, std::span<Fq> out) const {
  const Field& f = *field_;
  std::fill(out.begin(), out.end(), Fq{});
  for (const auto& t : products_) {
    const Fq a = x[t.a];
    if (a.is_zero()) continue;
    out[t.c] = f.add(out[t.c], f.mul(a, y[t.b]));
  }
}

void PatternGroup::mul_into(std::span<const Fq> g, std::span<const Fq> h, std::span<Fq> out) const {
  const Field& f = *field_;
  for (std::size_t r = 0; r < g.size(); ++r) out[r] = f.add(g[r], h[r]);
  for (const auto& t : products_) {
    const Fq a = g[t.a];
    if (a.is_zero()) continue;
    out[t.c] = f.add(out[t.c], f.mul(a, h[t.b]));
  }
}

void PatternGroup::inverse_into(std::span<const Fq> g, std::span<Fq> out) const {
  // (1+x)(1+y) = 1  <=>  y_c = -x_c - sum x_a y_b, solved by increasing root length.
  const Field& f = *field_;
  for (std::size_t r = 0; r < g.size(); ++r) out[r] = f.neg(g[r]);
  for (const auto& t : products_) {
    const Fq a = g[t.a];
    if (a.is_zero()) continue;
    out[t.c] = f.sub(out[t.c], f.mul(a, out[t.b]));
  }
}

AlgebraElement PatternGroup::product(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement z = zero();
  product_into(x.coords, y.coords, z.coords);
  return z;
}

AlgebraElement PatternGroup::bracket(const AlgebraElement& x, const AlgebraElement& y) const {
  auto xy = product(x, y), yx = product(y, x);
  AlgebraElement z = zero();
  for (std::size_t r = 0; r < dim(); ++r) z.coords[r] = field_->sub(xy.coords[r], yx.coords[r]);
  return z;
}

GroupElement PatternGroup::mul(const GroupElement& g, const GroupElement& h) const {
  GroupElement z = identity();
  mul_into(g.coords, h.coords, z.coords);
  return z;
}

GroupElement PatternGroup::inverse(const GroupElement& g) const {
  GroupElement z = identity();
  inverse_into(g.coords, z.coords);
  return z;
}

GroupElement PatternGroup::conjugate(const GroupElement& g, const GroupElement& h) const {
  return mul(mul(g, h), inverse(g));
}

GroupElement PatternGroup::commutator(const GroupElement& g, const GroupElement& h) const {
  return mul(mul(g, h), mul(inverse(g), inverse(h)));
}

Fq PatternGroup::pair(std::span<const Fq> t, std::span<const Fq> x) const {
  const Field& f = *field_;
  Fq s{};
  for (std::size_t r = 0; r < t.size(); ++r)
    if (!t[r].is_zero()) s = f.add(s, f.mul(t[r], x[r]));
  return s;
}

Fq PatternGroup::pair(const Functional& t, const AlgebraElement& x) const {
  if (t.coords.size() != dim() || x.coords.size() != dim())
    throw StructureError("functional and element belong to different pattern algebras");
  return pair(std::span<const Fq>(t.coords), std::span<const Fq>(x.coords));
}

MatrixFq PatternGroup::to_matrix(const AlgebraElement& x) const {
  MatrixFq m(field_, static_cast<std::size_t>(n()), static_cast<std::size_t>(n()));
  for (std::size_t r = 0; r < dim(); ++r) m(roots_[r].i - 1, roots_[r].j - 1) = x.coords[r];
  return m;
}

MatrixFq PatternGroup::to_matrix(const GroupElement& g) const {
  MatrixFq m = to_matrix(AlgebraElement{g.coords});
  for (int i = 0; i < n(); ++i) m(i, i) = field_->one();
  return m;
}

MatrixFq PatternGroup::to_matrix(const Functional& t) const {
  MatrixFq m(field_, static_cast<std::size_t>(n()), static_cast<std::size_t>(n()));
  for (std::size_t r = 0; r < dim(); ++r) m(roots_[r].j - 1, roots_[r].i - 1) = t.coords[r];
  return m;
}

AlgebraElement PatternGroup::algebra_from_matrix(const MatrixFq& m) const {
  if (m.rows() != static_cast<std::size_t>(n()) || m.cols() != static_cast<std::size_t>(n()))
    throw DimensionError("matrix is not n x n");
  AlgebraElement x = zero();
  for (int i = 1; i <= n(); ++i)
    for (int j = 1; j <= n(); ++j) {
      const Fq v = m(i - 1, j - 1);
      const int r = roots_.index_of(i, j);
      if (r >= 0) x.coords[r] = v;
      else if (!v.is_zero()) throw StructureError("matrix has support outside the pattern");
    }
  return x;
}

Functional PatternGroup::project_to_dual(const MatrixFq& m) const {
  if (m.rows() != static_cast<std::size_t>(n()) || m.cols() != static_cast<std::size_t>(n()))
    throw DimensionError("matrix is not n x n");
  Functional t = zero_functional();
  for (std::size_t r = 0; r < dim(); ++r) t.coords[r] = m(roots_[r].j - 1, roots_[r].i - 1);
  return t;
}

std::uint64_t PatternGroup::encode(std::span<const Fq> coords) const {
  std::uint64_t idx = 0;
  const auto qq = static_cast<std::uint64_t>(q());
  for (auto c : coords) idx = idx * qq + c.v;
  return idx;
}

void PatternGroup::decode(std::uint64_t index, std::span<Fq> out) const {
  const auto qq = static_cast<std::uint64_t>(q());
  for (std::size_t r = out.size(); r > 0; --r) {
    out[r - 1] = Fq{static_cast<std::uint16_t>(index % qq)};
    index /= qq;
  }
}

VectorFq PatternGroup::decode(std::uint64_t index) const {
  VectorFq v(dim());
  decode(index, v);
  return v;
}

void PatternGroup::enumerate(std::uint64_t cap, const std::function<void(const GroupElement&)>& visit) const {
  const std::uint64_t total = order_within(cap, "enumerate_group");
  GroupElement g = identity();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    decode(idx, g.coords);
    visit(g);
  }
}

std::string PatternGroup::describe() const { return roots_.to_string() + "@" + field_->describe(); }

ClosedRootSet GroupSpec::root_set() const {
  if (!partition.empty()) return parabolic_radical(partition);
  if (roots.empty()) throw InvalidInput("group spec has neither roots nor partition");
  return ClosedRootSet::closure(roots, n);
}

PatternGroup GroupSpec::build() const { return PatternGroup(root_set(), Field::of_order(q, modulus)); }

std::string GroupSpec::canonical() const {
  auto d = root_set();
  auto f = Field::of_order(q, modulus);
  nlohmann::json j;
  j["n"] = d.n();
  j["q"] = q;
  j["modulus"] = f->modulus();
  nlohmann::json rs = nlohmann::json::array();
  for (auto r : d.roots()) rs.push_back({r.i, r.j});
  j["roots"] = rs;
  return j.dump();
}

GroupSpec parse_group_spec(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("group spec is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidInput("group spec must be a JSON object");
  GroupSpec s;
  try {
    if (!j.contains("q")) throw InvalidInput("group spec lacks \"q\"");
    s.q = j.at("q").get<int>();
    if (j.contains("modulus")) s.modulus = j.at("modulus").get<std::vector<int>>();
    if (j.contains("partition")) {
      s.partition = j.at("partition").get<std::vector<int>>();
      if (s.partition.empty()) throw InvalidInput("empty partition");
      s.n = 0;
      for (int part : s.partition) s.n += part;
    } else {
      if (!j.contains("n") || !j.contains("roots"))
        throw InvalidInput("group spec needs either \"partition\" or \"n\" and \"roots\"");
      s.n = j.at("n").get<int>();
      for (const auto& r : j.at("roots")) {
        if (!r.is_array() || r.size() != 2) throw InvalidRoot("roots must be [i, j] pairs");
        s.roots.push_back({r[0].get<int>(), r[1].get<int>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("malformed group spec: ") + e.what());
  }
  // Validate eagerly so that errors surface at parse time.
  (void)s.root_set();
  (void)Field::of_order(s.q, s.modulus);
  return s;
}

}  // namespace patrep
