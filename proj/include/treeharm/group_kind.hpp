#pragma once

// The two transitivity regimes on a thick semi-regular tree: a group acting
// transitively on all vertices (forcing d0 == d1), or one preserving the
// bipartition with two vertex orbits.

#include <variant>

#include "treeharm/errors.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

struct VertexTransitive {
  int d;
  bool operator==(const VertexTransitive&) const = default;
};

struct TwoOrbits {
  int d;       // degree on the orbit of the base vertex
  int dprime;  // degree on the other orbit
  bool operator==(const TwoOrbits&) const = default;
};

using GroupKind = std::variant<VertexTransitive, TwoOrbits>;

inline void validate(const GroupKind& kind) {
  if (const auto* vt = std::get_if<VertexTransitive>(&kind)) {
    if (vt->d < 3) throw DomainError("vertex-transitive kind requires degree >= 3");
  } else {
    const auto& two = std::get<TwoOrbits>(kind);
    if (two.d < 3 || two.dprime < 3)
      throw DomainError("two-orbit kind requires both degrees >= 3");
  }
}

inline TreeParams tree_params_of(const GroupKind& kind) {
  if (const auto* vt = std::get_if<VertexTransitive>(&kind)) return TreeParams{vt->d, vt->d};
  const auto& two = std::get<TwoOrbits>(kind);
  return TreeParams{two.d, two.dprime};
}

// Distance step between vertices in one orbit: 1 when the group mixes the
// bipartition classes, 2 when it preserves them.
inline int orbit_distance_step(const GroupKind& kind) {
  return std::holds_alternative<VertexTransitive>(kind) ? 1 : 2;
}

}  // namespace treeharm
