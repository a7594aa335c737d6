#pragma once

#include <vector>

#include "patrep/error.hpp"
#include "patrep/field.hpp"
#include "patrep/pattern.hpp"

namespace patrep::test {

inline PatternGroup group_of(std::vector<Root> roots, int n, int q) {
  return PatternGroup(ClosedRootSet::closure(roots, n), Field::of_order(q));
}

inline PatternGroup radical(std::vector<int> parts, int q) {
  return PatternGroup(parabolic_radical(parts), Field::of_order(q));
}

inline PatternGroup heisenberg(int q) { return radical({1, 1, 1}, q); }

inline std::size_t idx(const PatternGroup& G, int i, int j) {
  const int r = G.roots().index_of(i, j);
  if (r < 0) throw InvalidRoot("no such root");
  return static_cast<std::size_t>(r);
}

/// Functional with entry c at matrix position (i, j), i > j.
inline Functional dual_unit(const PatternGroup& G, int i, int j, int c = 1) {
  return G.functional_unit(idx(G, j, i), G.field().from_int(c));
}

inline AlgebraElement e(const PatternGroup& G, int i, int j, int c = 1) {
  return G.unit(idx(G, i, j), G.field().from_int(c));
}

inline GroupElement x(const PatternGroup& G, int i, int j, int c = 1) {
  return G.root_element(idx(G, i, j), G.field().from_int(c));
}

inline SubspaceFq span_of(const PatternGroup& G, const std::vector<AlgebraElement>& v) {
  std::vector<VectorFq> rows;
  for (const auto& a : v) rows.push_back(a.coords);
  return SubspaceFq::span(G.field_ptr(), G.dim(), rows);
}

}  // namespace patrep::test
