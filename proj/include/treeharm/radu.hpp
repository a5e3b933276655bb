#pragma once

// Legal colorings, local actions, and the sign-condition machinery for the
// classified family of closed boundary-2-transitive groups: membership in
// each of the 12 defining shapes evaluated on a finite ball (three-valued,
// since conditions whose spheres leave the ball are undecidable there), the
// stabilizer filtration depths, and brute-force checks of the factorization
// and independence properties that drive the classification.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "treeharm/automorphism.hpp"
#include "treeharm/errors.hpp"
#include "treeharm/perm.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// A legal coloring maps each vertex into {1..deg} of its neighbours'
// degree so that every 1-sphere is bijectively labelled. The canonical one
// is deterministic: the root gets 1, children are labelled in child order,
// skipping the colour already taken by the parent of the sphere's center.
struct LegalColoring {
  std::vector<int> color;  // per vertex index, 1-based
};

inline LegalColoring canonical_legal_coloring(const Ball& ball) {
  LegalColoring lc;
  lc.color.assign(ball.size(), 0);
  lc.color[0] = 1;
  for (int v = 0; v < ball.size(); ++v) {
    int parent = ball.verts[v].parent;
    int forbidden = parent >= 0 ? lc.color[parent] : 0;
    int c = 1;
    for (int child : ball.verts[v].children) {
      if (c == forbidden) ++c;
      lc.color[child] = c;
      ++c;
    }
  }
  return lc;
}

// Every 1-sphere must be injectively coloured within {1..deg} of its
// center, bijectively when the center is interior.
inline void validate_legal_coloring(const Ball& ball, const LegalColoring& lc) {
  if (static_cast<int>(lc.color.size()) != ball.size())
    throw DomainError("coloring size does not match the ball");
  for (int v = 0; v < ball.size(); ++v) {
    int deg = ball.degree_of(v);
    std::vector<bool> used(static_cast<size_t>(deg) + 1, false);
    auto take = [&](int u) {
      int c = lc.color[u];
      if (c < 1 || c > deg || used[c])
        throw DomainError("coloring is not bijective on the 1-sphere of vertex " +
                          format_addr(ball.verts[v].addr));
      used[c] = true;
    };
    if (ball.verts[v].parent >= 0) take(ball.verts[v].parent);
    for (int child : ball.verts[v].children) take(child);
  }
}

// sigma(g, v): the permutation of colours induced by g on the 1-sphere of v.
inline Permutation local_action(const Ball& ball, const LegalColoring& lc,
                                const BallAutomorphism& g, int v) {
  int w = g.image[v];
  if (!ball.is_interior(v) || !ball.is_interior(w))
    throw DomainError("local action requires the vertex and its image to be interior");
  Permutation p;
  p.img.assign(ball.degree_of(v), -1);
  auto set = [&](int u) { p.img[lc.color[u] - 1] = lc.color[g.image[u]] - 1; };
  if (ball.verts[v].parent >= 0) set(ball.verts[v].parent);
  for (int child : ball.verts[v].children) set(child);
  p.validate();
  return p;
}

inline int sgn_over(const Ball& ball, const LegalColoring& lc, const BallAutomorphism& g,
                    const std::vector<int>& vertices) {
  int sign = 1;
  for (int v : vertices) sign *= local_action(ball, lc, g, v).sign();
  return sign;
}

// Vertices at distance exactly r from v, walking inside the ball.
inline std::vector<int> sphere_around(const Ball& ball, int v, int r) {
  std::vector<int> current{v};
  std::vector<int> prev;
  for (int step = 0; step < r; ++step) {
    std::vector<int> next;
    std::set<int> exclude(prev.begin(), prev.end());
    for (int u : current) {
      int parent = ball.verts[u].parent;
      if (parent >= 0 && !exclude.count(parent)) next.push_back(parent);
      for (int child : ball.verts[u].children)
        if (!exclude.count(child)) next.push_back(child);
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    prev = std::move(current);
    current = std::move(next);
  }
  return current;
}

inline std::vector<int> sphere_union(const Ball& ball, int v, const std::vector<int>& radii) {
  std::vector<int> out;
  for (int r : radii) {
    auto s = sphere_around(ball, v, r);
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// S_Y(v) is usable on the ball only when it is complete and entirely
// interior; walking away from the ball center shows this is exactly
// dist(v) + max(Y) < radius.
inline bool sphere_condition_checkable(const Ball& ball, int v, const std::vector<int>& radii) {
  if (radii.empty()) return true;
  int max_r = *std::max_element(radii.begin(), radii.end());
  return ball.verts[v].dist_center + max_r < ball.radius;
}

enum class TriState { Satisfied, Violated, Undetermined };

inline std::string to_string(TriState t) {
  switch (t) {
    case TriState::Satisfied: return "satisfied";
    case TriState::Violated: return "violated";
    case TriState::Undetermined: return "undetermined";
  }
  throw DomainError("unknown tri-state value");
}

// The 12 shapes of sign-condition groups. X is the symmetric two-sided
// radius set (families 3-6); Y0 and Y1 are the one-sided sets whose
// conditioned vertex type is determined by the parity of their maximum
// (families 7-12, max(empty) = 0). Starred slots require a constant sign
// rather than sign 1; family 6 additionally ties its two constants to
// whether the element preserves types.
struct RaduVariant {
  int family = 1;  // 1..12
  std::vector<int> X;
  std::vector<int> Y0;
  std::vector<int> Y1;
  std::optional<int> eps0;  // family 6 only: pin the V0 constant
  std::optional<int> eps1;  // family 6 only: pin the V1 constant
};

inline std::string family_name(const RaduVariant& v) {
  switch (v.family) {
    case 1: return "G(empty,empty)";
    case 2: return "G+(empty,empty)";
    case 3: return "G(X,X)";
    case 4: return "G(X,X)*";
    case 5: return "G(X*,X*)";
    case 6: return "G'(X*,X*)";
    case 7: return "G+(Y0,empty)";
    case 8: return "G+(empty,Y1)";
    case 9: return "G+(Y0,Y1)";
    case 10: return "G+(Y0*,empty)";
    case 11: return "G+(empty,Y1*)";
    case 12: return "G+(Y0*,Y1*)";
  }
  throw DomainError("variant family must be between 1 and 12");
}

inline void validate_variant(const RaduVariant& v) {
  if (v.family < 1 || v.family > 12) throw DomainError("variant family must be between 1 and 12");
  auto check_set = [](const std::vector<int>& s, const char* name, bool used) {
    if (!used && !s.empty())
      throw DomainError(std::string(name) + " is not a parameter of this family");
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0) throw DomainError(std::string(name) + " entries must be non-negative");
      if (i > 0 && s[i] <= s[i - 1])
        throw DomainError(std::string(name) + " must be strictly increasing");
    }
  };
  bool uses_x = v.family >= 3 && v.family <= 6;
  bool uses_y0 = v.family == 7 || v.family == 9 || v.family == 10 || v.family == 12;
  bool uses_y1 = v.family == 8 || v.family == 9 || v.family == 11 || v.family == 12;
  check_set(v.X, "X", uses_x);
  check_set(v.Y0, "Y0", uses_y0);
  check_set(v.Y1, "Y1", uses_y1);
  if ((v.eps0 || v.eps1) && v.family != 6)
    throw DomainError("sign constants apply to family 6 only");
  for (const auto& e : {v.eps0, v.eps1})
    if (e && *e != 1 && *e != -1) throw DomainError("sign constants must be +1 or -1");
}

inline int max_or_zero(const std::vector<int>& s) {
  return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

struct MembershipReport {
  TriState result = TriState::Satisfied;
  std::string first_violation;  // set when Violated
  int checked = 0;              // evaluated sphere conditions
  int uncheckable = 0;          // conditions whose sphere leaves the interior
};

namespace detail {

struct ConditionAccumulator {
  const Ball& ball;
  const LegalColoring& lc;
  const BallAutomorphism& g;
  MembershipReport rep;

  void violate(const std::string& what) {
    if (rep.result != TriState::Violated) {
      rep.result = TriState::Violated;
      rep.first_violation = what;
    }
  }

  // Sgn(g, S_Y(v)) = 1 for every ball vertex v of the given type.
  void all_one(const std::vector<int>& radii, int type) {
    for (int v = 0; v < ball.size(); ++v) {
      if (ball.type_of(v) != type) continue;
      if (!sphere_condition_checkable(ball, v, radii)) {
        ++rep.uncheckable;
        continue;
      }
      ++rep.checked;
      if (sgn_over(ball, lc, g, sphere_union(ball, v, radii)) != 1)
        violate("sign condition at vertex " + format_addr(ball.verts[v].addr));
    }
  }

  // Sgn(g, S_Y(v)) constant over the ball vertices of the given type;
  // returns the constant when at least one condition was evaluable.
  std::optional<int> constant(const std::vector<int>& radii, int type, const char* label) {
    std::optional<int> value;
    for (int v = 0; v < ball.size(); ++v) {
      if (ball.type_of(v) != type) continue;
      if (!sphere_condition_checkable(ball, v, radii)) {
        ++rep.uncheckable;
        continue;
      }
      ++rep.checked;
      int s = sgn_over(ball, lc, g, sphere_union(ball, v, radii));
      if (!value) {
        value = s;
      } else if (*value != s) {
        violate(std::string("inconsistent sign over ") + label + " at vertex " +
                format_addr(ball.verts[v].addr));
      }
    }
    return value;
  }

  void require_type_preserving() {
    ++rep.checked;
    if (!preserves_types(ball, g)) violate("element does not preserve types");
  }
};

}  // namespace detail

inline MembershipReport variant_membership_report(const Ball& ball, const LegalColoring& lc,
                                                  const BallAutomorphism& g,
                                                  const RaduVariant& variant) {
  validate_variant(variant);
  if (static_cast<int>(g.image.size()) != ball.size())
    throw DomainError("automorphism size does not match the ball");
  detail::ConditionAccumulator acc{ball, lc, g, {}};
  int t0 = max_or_zero(variant.Y0) % 2;
  int t1 = (max_or_zero(variant.Y1) + 1) % 2;
  switch (variant.family) {
    case 1:
      break;
    case 2:
      acc.require_type_preserving();
      break;
    case 3:
      acc.all_one(variant.X, 0);
      acc.all_one(variant.X, 1);
      break;
    case 4: {
      auto c0 = acc.constant(variant.X, 0, "V0");
      auto c1 = acc.constant(variant.X, 1, "V1");
      if (c0 && c1 && *c0 != *c1) acc.violate("sign differs between the two vertex types");
      if (!c0 || !c1) ++acc.rep.uncheckable;
      break;
    }
    case 5:
      acc.constant(variant.X, 0, "V0");
      acc.constant(variant.X, 1, "V1");
      break;
    case 6: {
      auto c0 = acc.constant(variant.X, 0, "V0");
      auto c1 = acc.constant(variant.X, 1, "V1");
      if (variant.eps0 && c0 && *c0 != *variant.eps0) acc.violate("V0 sign differs from eps0");
      if (variant.eps1 && c1 && *c1 != *variant.eps1) acc.violate("V1 sign differs from eps1");
      if (c0 && c1) {
        bool tp = preserves_types(ball, g);
        if ((*c0 == *c1) != tp)
          acc.violate("sign constants do not match the type-preservation parity");
      } else {
        ++acc.rep.uncheckable;
      }
      break;
    }
    case 7:
      acc.require_type_preserving();
      acc.all_one(variant.Y0, t0);
      break;
    case 8:
      acc.require_type_preserving();
      acc.all_one(variant.Y1, t1);
      break;
    case 9:
      acc.require_type_preserving();
      acc.all_one(variant.Y0, t0);
      acc.all_one(variant.Y1, t1);
      break;
    case 10:
      acc.require_type_preserving();
      acc.constant(variant.Y0, t0, "V_t0");
      break;
    case 11:
      acc.require_type_preserving();
      acc.constant(variant.Y1, t1, "V_t1");
      break;
    case 12:
      acc.constant(variant.Y0, t0, "V_t0");
      acc.constant(variant.Y1, t1, "V_t1");
      break;
  }
  if (acc.rep.result != TriState::Violated && acc.rep.uncheckable > 0)
    acc.rep.result = TriState::Undetermined;
  return acc.rep;
}

inline TriState variant_membership(const Ball& ball, const LegalColoring& lc,
                                   const BallAutomorphism& g, const RaduVariant& variant) {
  return variant_membership_report(ball, lc, g, variant).result;
}

// Position of a complete finite subtree in the two-sided stabilizer
// filtration: edge balls sit at even depths 2r, vertex balls at odd depths
// 2r - 1. A single vertex is a vertex stabilizer, not a member.
struct GenericSubtree {
  CenterKind kind;
  int radius;
};

inline int filtration_depth(const GenericSubtree& s) {
  if (s.radius < 0) throw DomainError("negative subtree radius");
  if (s.kind == CenterKind::Edge) return 2 * s.radius;
  if (s.radius == 0)
    throw DomainError("a single vertex does not occur in the edge-stabilizer filtration");
  return 2 * s.radius - 1;
}

// A concrete ball around a vertex or edge of the ambient ball; edges are
// named by their child endpoint (the parent link), so center_b is the child.
struct SubtreePlacement {
  CenterKind kind;
  int center_a;       // vertex, or the parent endpoint of the edge
  int center_b = -1;  // the child endpoint for edges
  int radius = 0;
};

inline SubtreePlacement vertex_placement(int v, int radius) {
  return SubtreePlacement{CenterKind::Vertex, v, -1, radius};
}

inline SubtreePlacement edge_placement(const Ball& ball, int child, int radius) {
  int parent = ball.verts[child].parent;
  if (parent < 0) throw DomainError("edges are named by a vertex with a parent link");
  return SubtreePlacement{CenterKind::Edge, parent, child, radius};
}

inline bool placement_complete(const Ball& ball, const SubtreePlacement& p) {
  int far = ball.verts[p.center_a].dist_center;
  if (p.kind == CenterKind::Edge) far = std::max(far, ball.verts[p.center_b].dist_center);
  return far + p.radius <= ball.radius;
}

inline std::vector<int> placement_vertices(const Ball& ball, const SubtreePlacement& p) {
  std::vector<int> centers{p.center_a};
  if (p.kind == CenterKind::Edge) centers.push_back(p.center_b);
  std::vector<int> out;
  for (int c : centers) {
    auto s = sphere_union(ball, c, [&] {
      std::vector<int> radii(static_cast<size_t>(p.radius) + 1);
      std::iota(radii.begin(), radii.end(), 0);
      return radii;
    }());
    out.insert(out.end(), s.begin(), s.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline std::vector<BallAutomorphism> placement_stabilizer(const Ball& ball,
                                                          const SubtreePlacement& p,
                                                          const EnumerationOptions& opt = {}) {
  std::vector<VertexAddr> addrs;
  for (int v : placement_vertices(ball, p)) addrs.push_back(ball.verts[v].addr);
  return pointwise_stabilizer(ball, addrs, opt);
}

// Brute-force search for a witness of the one-step factorization: a subtree
// W one filtration level below U with Fix(U) <= Fix(W) <= Fix(V) Fix(U).
struct FactorizationReport {
  bool found = false;
  SubtreePlacement witness;
  std::uint64_t fix_u = 0, fix_v = 0, fix_w = 0;
  int candidates_checked = 0;
};

inline FactorizationReport check_factorization_i(const Ball& ball, const SubtreePlacement& u,
                                                 const SubtreePlacement& v,
                                                 const EnumerationOptions& opt = {}) {
  GenericSubtree u_shape{u.kind, u.radius};
  if (filtration_depth(u_shape) < 1) throw DomainError("U must have positive filtration depth");
  if (!placement_complete(ball, u) || !placement_complete(ball, v))
    throw DomainError("subtree placements must be complete inside the ball");

  auto u_set = placement_vertices(ball, u);
  auto v_set = placement_vertices(ball, v);
  if (std::includes(u_set.begin(), u_set.end(), v_set.begin(), v_set.end()))
    throw DomainError("V contained in U makes the factorization trivial");

  auto fix_u = placement_stabilizer(ball, u, opt);
  auto fix_v = placement_stabilizer(ball, v, opt);
  std::set<std::vector<int>> fix_v_set;
  for (const auto& x : fix_v) fix_v_set.insert(x.image);
  std::vector<BallAutomorphism> fix_u_inverses;
  fix_u_inverses.reserve(fix_u.size());
  for (const auto& x : fix_u) fix_u_inverses.push_back(inverse(x));

  FactorizationReport rep;
  rep.fix_u = fix_u.size();
  rep.fix_v = fix_v.size();

  // Candidate subtrees one level down in the filtration.
  std::vector<SubtreePlacement> candidates;
  if (u.kind == CenterKind::Vertex) {
    for (int child = 1; child < ball.size(); ++child) {
      SubtreePlacement w = edge_placement(ball, child, u.radius - 1);
      if (placement_complete(ball, w)) candidates.push_back(w);
    }
  } else {
    for (int vtx = 0; vtx < ball.size(); ++vtx) {
      SubtreePlacement w = vertex_placement(vtx, u.radius);
      if (placement_complete(ball, w)) candidates.push_back(w);
    }
  }

  for (const auto& w : candidates) {
    ++rep.candidates_checked;
    // Fix(U) <= Fix(W): every stabilizer of U must fix W's subtree.
    auto w_set = placement_vertices(ball, w);
    bool contained = true;
    for (const auto& x : fix_u) {
      for (int vert : w_set)
        if (x.image[vert] != vert) {
          contained = false;
          break;
        }
      if (!contained) break;
    }
    if (!contained) continue;

    auto fix_w = placement_stabilizer(ball, w, opt);
    bool covered = true;
    for (const auto& x : fix_w) {
      bool decomposed = false;
      for (const auto& u_inv : fix_u_inverses) {
        if (fix_v_set.count(compose(x, u_inv).image)) {
          decomposed = true;
          break;
        }
      }
      if (!decomposed) {
        covered = false;
        break;
      }
    }
    if (covered) {
      rep.found = true;
      rep.witness = w;
      rep.fix_w = fix_w.size();
      return rep;
    }
  }
  return rep;
}

// Independence property at depth k: the stabilizer of B(e, k-1) must be the
// product of its subgroups acting only on either half-tree of e.
struct IpkReport {
  bool holds = false;
  std::uint64_t fix_n = 0, left = 0, right = 0, products = 0;
};

inline IpkReport check_ipk(const Ball& ball, int k, int edge_child = 1,
                           const EnumerationOptions& opt = {}) {
  if (k < 1) throw DomainError("independence depth must be at least 1");
  SubtreePlacement n = edge_placement(ball, edge_child, k - 1);
  int far = std::max(ball.verts[n.center_a].dist_center, ball.verts[n.center_b].dist_center);
  if (far + (k - 1) + 1 > ball.radius)
    throw DomainError("insufficient radius for the independence property at this depth");

  auto fix_n = placement_stabilizer(ball, n, opt);
  int a = n.center_a, b = n.center_b;
  std::vector<int> half_a, half_b;
  for (int x = 0; x < ball.size(); ++x)
    (distance(ball, x, a) < distance(ball, x, b) ? half_a : half_b).push_back(x);

  auto fixes_all = [](const BallAutomorphism& g, const std::vector<int>& set) {
    for (int x : set)
      if (g.image[x] != x) return false;
    return true;
  };
  std::vector<BallAutomorphism> left, right;
  for (const auto& g : fix_n) {
    if (fixes_all(g, half_a)) left.push_back(g);
    if (fixes_all(g, half_b)) right.push_back(g);
  }

  std::set<std::vector<int>> products;
  for (const auto& l : left)
    for (const auto& r : right) products.insert(compose(l, r).image);
  std::set<std::vector<int>> fix_n_set;
  for (const auto& g : fix_n) fix_n_set.insert(g.image);

  IpkReport rep;
  rep.fix_n = fix_n.size();
  rep.left = left.size();
  rep.right = right.size();
  rep.products = products.size();
  rep.holds = products == fix_n_set;
  return rep;
}

// First entries of the increasing enumeration of group orders |Theta|
// realized by the finite local-action data of the classification.
inline std::array<int, 10> theta_prefix() {
  return {34, 35, 39, 45, 46, 51, 52, 55, 56, 58};
}

// Uniform random element of Aut(ball) for a vertex-centered ball, assigning
// child matchings top-down. When even_at is non-empty the matching at each
// listed vertex is corrected by one transposition if needed, making the
// local action there even; the fix at v changes no local action elsewhere.
template <class URBG>
inline BallAutomorphism random_automorphism(const Ball& ball, URBG& rng,
                                            const std::vector<int>& even_at = {},
                                            const LegalColoring* lc = nullptr) {
  if (ball.center_kind != CenterKind::Vertex)
    throw DomainError("random sampling is implemented for vertex-centered balls");
  std::set<int> constrained(even_at.begin(), even_at.end());
  if (!constrained.empty() && lc == nullptr)
    throw DomainError("sign constraints need a coloring");
  BallAutomorphism g;
  g.image.assign(ball.size(), -1);
  g.image[0] = 0;
  for (int v = 0; v < ball.size(); ++v) {
    const auto& children = ball.verts[v].children;
    if (children.empty()) continue;
    std::vector<int> targets = ball.verts[g.image[v]].children;
    std::shuffle(targets.begin(), targets.end(), rng);
    for (size_t i = 0; i < children.size(); ++i) g.image[children[i]] = targets[i];
    if (constrained.count(v)) {
      if (!ball.is_interior(v))
        throw DomainError("sign constraints require interior vertices");
      if (local_action(ball, *lc, g, v).sign() != 1) {
        std::swap(g.image[children[0]], g.image[children[1]]);
      }
    }
  }
  return g;
}

}  // namespace treeharm
