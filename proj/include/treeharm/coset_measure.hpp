#pragma once

// Sphere cardinalities and Haar measures of the double cosets indexed by
// center displacement. Two normalizations coexist and every value carries
// its tag: mu(Fix(v)) = 1 for the vertex family, mu(Fix(e)) = 1 for the edge
// families. All values are exact rationals (in fact integers).

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "treeharm/errors.hpp"
#include "treeharm/group_kind.hpp"
#include "treeharm/rational.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

enum class Normalization { FixVertexOne, FixEdgeOne };

inline std::string to_string(Normalization n) {
  return n == Normalization::FixVertexOne ? "fix_vertex_one" : "fix_edge_one";
}

struct MeasureValue {
  Rational value;
  Normalization normalization;
};

enum class CosetFamilyTag {
  VertexCoset,         // Fix(v) tau^n Fix(v), n >= 0
  EdgeCoset,           // Fix(e) tau^n Fix(e), n in Z
  EdgeCosetInversion,  // Fix(e) tau^n h Fix(e), n in Z (single-orbit kind only)
  EdgeCosetKv,         // Fix(e) tau^m k_v Fix(e), m >= 1 (two-orbit kind only)
  EdgeCosetKvNeg       // Fix(e) tau^{-(m-1)} k_v Fix(e), m >= 1 (two-orbit kind only)
};

inline std::string family_name(CosetFamilyTag tag) {
  switch (tag) {
    case CosetFamilyTag::VertexCoset: return "vertex";
    case CosetFamilyTag::EdgeCoset: return "edge";
    case CosetFamilyTag::EdgeCosetInversion: return "edge_inversion";
    case CosetFamilyTag::EdgeCosetKv: return "edge_kv";
    case CosetFamilyTag::EdgeCosetKvNeg: return "edge_kv_neg";
  }
  throw DomainError("unknown coset family tag");
}

struct CosetFamily {
  CosetFamilyTag tag;
  long long n;
  GroupKind kind;
};

// |S_n(v)| for a vertex v of the given type: the first step opens deg(parity)
// branches, every later step deg - 1.
inline BigInt sphere_size(const TreeParams& params, int parity, long long n) {
  params.validate();
  if (parity != 0 && parity != 1) throw DomainError("vertex type must be 0 or 1");
  if (n < 0) throw DomainError("sphere radius must be non-negative");
  if (n == 0) return 1;
  BigInt count = params.degree(parity);
  for (long long k = 1; k < n; ++k) count *= params.degree((parity + k) % 2) - 1;
  return count;
}

// Tree parameters in which the base vertex (degree d of the kind) has the
// given type.
inline TreeParams params_with_base(const GroupKind& kind, int parity) {
  validate(kind);
  if (parity != 0 && parity != 1) throw DomainError("vertex type must be 0 or 1");
  if (const auto* vt = std::get_if<VertexTransitive>(&kind)) return TreeParams{vt->d, vt->d};
  const auto& two = std::get<TwoOrbits>(kind);
  return parity == 0 ? TreeParams{two.d, two.dprime} : TreeParams{two.dprime, two.d};
}

// mu(Fix(v) tau^n Fix(v)) with mu(Fix(v)) = 1: the sphere through the n-th
// displacement of v, one step per n when the group is vertex-transitive and
// two when it preserves the bipartition.
inline MeasureValue vertex_coset_measure(const GroupKind& kind, int parity, long long n) {
  if (n < 0) throw DomainError("vertex coset index must be non-negative");
  TreeParams params = params_with_base(kind, parity);
  long long step = orbit_distance_step(kind);
  return MeasureValue{Rational(sphere_size(params, parity, n * step)), Normalization::FixVertexOne};
}

inline void validate(const CosetFamily& family) {
  validate(family.kind);
  bool vt = std::holds_alternative<VertexTransitive>(family.kind);
  switch (family.tag) {
    case CosetFamilyTag::VertexCoset:
      if (family.n < 0) throw DomainError("vertex coset index must be non-negative");
      return;
    case CosetFamilyTag::EdgeCoset:
      return;
    case CosetFamilyTag::EdgeCosetInversion:
      if (!vt)
        throw DomainError("the inversion coset family requires the vertex-transitive kind");
      return;
    case CosetFamilyTag::EdgeCosetKv:
    case CosetFamilyTag::EdgeCosetKvNeg:
      if (vt) throw DomainError("the k_v coset families require the two-orbit kind");
      if (family.n < 1) throw DomainError("k_v coset index must be at least 1");
      return;
  }
  throw DomainError("unknown coset family tag");
}

inline BigInt pow_int(BigInt base, long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= base;
  return r;
}

// mu of the edge double coset with mu(Fix(e)) = 1; integer-valued, equal to
// the number of (oriented, for the single-orbit kind) edges in the orbit of
// the displaced center edge under Fix(e).
inline MeasureValue edge_coset_measure(const CosetFamily& family) {
  validate(family);
  long long n = family.n;
  long long an = n < 0 ? -n : n;
  BigInt value;
  if (const auto* vt = std::get_if<VertexTransitive>(&family.kind)) {
    switch (family.tag) {
      case CosetFamilyTag::EdgeCoset:
      case CosetFamilyTag::EdgeCosetInversion:
        value = pow_int(vt->d - 1, an);
        break;
      default:
        throw DomainError("not an edge coset family");
    }
  } else {
    const auto& two = std::get<TwoOrbits>(family.kind);
    BigInt a = two.d - 1, b = two.dprime - 1;
    switch (family.tag) {
      case CosetFamilyTag::EdgeCoset:
        value = pow_int(a * b, an);
        break;
      case CosetFamilyTag::EdgeCosetKv:
        value = pow_int(a, n - 1) * pow_int(b, n);
        break;
      case CosetFamilyTag::EdgeCosetKvNeg:
        value = pow_int(a, n) * pow_int(b, n - 1);
        break;
      default:
        throw DomainError("not an edge coset family");
    }
  }
  return MeasureValue{Rational(value), Normalization::FixEdgeOne};
}

// Brute-force confirmation of the double-coset decomposition on a finite
// ball. Double cosets of the center stabilizer correspond to its orbits on
// displaced centers, so we classify every realized displaced center (a
// same-type vertex, or an edge with its orientation for the single-orbit
// kind) by its distance profile and compare class sizes with the measures.
struct CosetClassEntry {
  CosetFamilyTag tag;
  long long n;
  BigInt expected;
  BigInt realized;
  bool matches;
};

struct CosetPartitionReport {
  CenterKind center_kind;
  BigInt total_objects;  // same-type vertices, or (oriented) edges
  BigInt measure_sum;
  std::vector<CosetClassEntry> classes;
  bool partition_ok;  // every object fell into exactly one recognized class
  bool sizes_ok;      // every class size equals its measure
  bool ok() const { return partition_ok && sizes_ok; }
};

namespace detail {

// Oriented-edge displacement class for the vertex-transitive kind: the
// distance profile of (x, y) against the center edge (a, b) = (0, 1)
// determines the pair (n, inverted) of the representative tau^n h^f.
inline std::pair<CosetFamilyTag, long long> classify_oriented_edge(const Ball& ball, int x,
                                                                   int y) {
  long long p = distance(ball, x, 0), q = distance(ball, x, 1);
  long long r = distance(ball, y, 0), s = distance(ball, y, 1);
  if (p == 0 && q == 1 && r == 1 && s == 0) return {CosetFamilyTag::EdgeCoset, 0};
  if (p == 1 && q == 0 && r == 0 && s == 1) return {CosetFamilyTag::EdgeCosetInversion, 0};
  if (q == p - 1 && r == p + 1 && s == p) return {CosetFamilyTag::EdgeCoset, p};
  if (q == p + 1 && r == p - 1 && s == p) return {CosetFamilyTag::EdgeCoset, -p};
  if (q == p - 1 && r == p - 1 && s == p - 2) return {CosetFamilyTag::EdgeCosetInversion, p - 1};
  if (q == p + 1 && r == p + 1 && s == p + 2) return {CosetFamilyTag::EdgeCosetInversion, -(p + 1)};
  throw DomainError("oriented edge has no recognizable displacement profile");
}

// Type-preserving kind: edges keep their canonical orientation, so the class
// of an edge is the side it hangs off plus its distance to the near center
// vertex. Even distances give the k_v families, odd ones the translations.
inline std::pair<CosetFamilyTag, long long> classify_typed_edge(const Ball& ball, int parent,
                                                                int child) {
  if (parent == 0 && child == 1) return {CosetFamilyTag::EdgeCoset, 0};
  long long da = std::min(distance(ball, parent, 0), distance(ball, child, 0));
  long long db = std::min(distance(ball, parent, 1), distance(ball, child, 1));
  if (da == db) throw DomainError("edge equidistant from both center endpoints");
  if (da < db) {  // base-vertex side
    if (da % 2 == 0) return {CosetFamilyTag::EdgeCosetKvNeg, da / 2 + 1};
    return {CosetFamilyTag::EdgeCoset, -(da + 1) / 2};
  }
  if (db % 2 == 0) return {CosetFamilyTag::EdgeCosetKv, db / 2 + 1};
  return {CosetFamilyTag::EdgeCoset, (db + 1) / 2};
}

}  // namespace detail

inline CosetPartitionReport verify_coset_partition(const Ball& ball, const GroupKind& kind) {
  validate(kind);
  CosetPartitionReport rep;
  rep.center_kind = ball.center_kind;
  rep.partition_ok = true;

  bool vt = std::holds_alternative<VertexTransitive>(kind);
  {
    TreeParams expect = params_with_base(kind, ball.root_type);
    if (!(expect == ball.params))
      throw DomainError("group kind degrees do not match the ball");
  }

  std::map<std::pair<int, long long>, BigInt> realized;
  if (ball.center_kind == CenterKind::Vertex) {
    long long step = orbit_distance_step(kind);
    BigInt total = 0;
    for (int v = 0; v < ball.size(); ++v) {
      if (ball.type_of(v) != ball.root_type) continue;
      ++total;
      long long dist = ball.verts[v].dist_center;
      if (dist % step != 0) {
        rep.partition_ok = false;
        continue;
      }
      realized[{static_cast<int>(CosetFamilyTag::VertexCoset), dist / step}] += 1;
    }
    rep.total_objects = total;
    rep.measure_sum = 0;
    rep.sizes_ok = true;
    for (const auto& [key, count] : realized) {
      CosetClassEntry entry;
      entry.tag = CosetFamilyTag::VertexCoset;
      entry.n = key.second;
      entry.expected = numerator_of(vertex_coset_measure(kind, ball.root_type, key.second).value);
      entry.realized = count;
      entry.matches = entry.expected == entry.realized;
      rep.sizes_ok = rep.sizes_ok && entry.matches;
      rep.measure_sum += entry.expected;
      rep.classes.push_back(entry);
    }
    return rep;
  }

  // Edge-centered ball: every edge is a parent link, the center edge is
  // (0, 1). For the single-orbit kind both orientations are classified.
  BigInt total = 0;
  for (int child = 1; child < ball.size(); ++child) {
    int parent = ball.verts[child].parent;
    if (vt) {
      for (auto [x, y] : {std::pair{parent, child}, std::pair{child, parent}}) {
        ++total;
        auto [tag, n] = detail::classify_oriented_edge(ball, x, y);
        realized[{static_cast<int>(tag), n}] += 1;
      }
    } else {
      ++total;
      auto [tag, n] = detail::classify_typed_edge(ball, parent, child);
      realized[{static_cast<int>(tag), n}] += 1;
    }
  }
  rep.total_objects = total;
  rep.measure_sum = 0;
  rep.sizes_ok = true;
  for (const auto& [key, count] : realized) {
    CosetClassEntry entry;
    entry.tag = static_cast<CosetFamilyTag>(key.first);
    entry.n = key.second;
    entry.expected = numerator_of(edge_coset_measure({entry.tag, entry.n, kind}).value);
    entry.realized = count;
    entry.matches = entry.expected == entry.realized;
    rep.sizes_ok = rep.sizes_ok && entry.matches;
    rep.measure_sum += entry.expected;
    rep.classes.push_back(entry);
  }
  return rep;
}

}  // namespace treeharm
