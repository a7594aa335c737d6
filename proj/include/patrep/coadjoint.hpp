#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "patrep/limits.hpp"
#include "patrep/linalg.hpp"
#include "patrep/pattern.hpp"

namespace patrep {

/// Ad*(g) T = [g T g^{-1}]_{g_{-D}}.
Functional coadjoint_act(const PatternGroup& G, const GroupElement& g, const Functional& t);

/// Reusable scratch space for repeated coadjoint actions in sweeps.
class CoadjointActor {
 public:
  explicit CoadjointActor(const PatternGroup& G);
  /// out = Ad*(g) t, where g and g_inv are given as coordinates.
  void act(std::span<const Fq> g, std::span<const Fq> g_inv, std::span<const Fq> t, std::span<Fq> out);

 private:
  const PatternGroup& G_;
  std::size_t n_;
  std::vector<Fq> gm_, gi_, tm_, tmp_;
};

/// {X : [[X, T]]_{g^t} = 0}, the Lie algebra of the stabilizer of T.
SubspaceFq stabilizer_subalgebra(const PatternGroup& G, const Functional& t);

struct Orbit {
  Functional representative;
  std::optional<std::vector<Functional>> elements;  // sorted, when enumerated
  std::uint64_t size = 0;
  std::size_t stab_dim = 0;
};

/// Orbit of T. The size always comes from the stabilizer dimension; with
/// enumerate=true the orbit is also built by BFS over the generators and the
/// two counts are checked against each other.
Orbit orbit_of(const PatternGroup& G, const Functional& t, bool enumerate, const Limits& limits = {});

/// The coadjoint orbits partitioning g^t, each represented by its least
/// element in index order. label[idx] is the orbit id of functional idx.
struct OrbitPartition {
  std::vector<Orbit> orbits;
  std::vector<std::uint32_t> label;
};
OrbitPartition all_orbits(const PatternGroup& G, const Limits& limits = {});

/// Conjugacy classes of G_D, each represented by its least element.
struct ClassPartition {
  std::vector<std::uint64_t> reps;   // element indices, ascending
  std::vector<std::uint64_t> sizes;
  std::vector<std::uint32_t> label;  // element index -> class id
  std::uint64_t group_order = 0;

  std::size_t count() const { return reps.size(); }
  /// Class id of g^{-1} for each class.
  std::vector<std::uint32_t> inverse_classes(const PatternGroup& G) const;
};
ClassPartition conjugacy_classes(const PatternGroup& G, const Limits& limits = {});

}  // namespace patrep
