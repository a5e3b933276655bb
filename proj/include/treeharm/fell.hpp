#pragma once

// Finite combinatorial model of the unitary dual with its Fell topology:
// the spherical interval, the special and exceptional points glued to its
// endpoints (the non-Hausdorff pairs), the cortex, and an isolated clopen
// set of cuspidal points whose count is an input assumption.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "treeharm/errors.hpp"
#include "treeharm/group_kind.hpp"
#include "treeharm/rational.hpp"
#include "treeharm/spherical.hpp"

namespace treeharm {

struct Spherical {
  Rational alpha;
  bool operator==(const Spherical&) const = default;
};
struct SpecialPlus {
  bool operator==(const SpecialPlus&) const = default;
};
struct SpecialMinus {
  bool operator==(const SpecialMinus&) const = default;
};
struct SpecialSigma {
  bool operator==(const SpecialSigma&) const = default;
};
struct ExceptionalV {
  bool operator==(const ExceptionalV&) const = default;
};
struct ExceptionalVprime {
  bool operator==(const ExceptionalVprime&) const = default;
};
struct Cuspidal {
  int id;
  bool operator==(const Cuspidal&) const = default;
};

using DualPoint = std::variant<Spherical, SpecialPlus, SpecialMinus, SpecialSigma, ExceptionalV,
                               ExceptionalVprime, Cuspidal>;

inline std::string to_string(const DualPoint& p) {
  if (const auto* s = std::get_if<Spherical>(&p)) return "spherical(" + to_string(s->alpha) + ")";
  if (std::holds_alternative<SpecialPlus>(p)) return "special_plus";
  if (std::holds_alternative<SpecialMinus>(p)) return "special_minus";
  if (std::holds_alternative<SpecialSigma>(p)) return "special_sigma";
  if (std::holds_alternative<ExceptionalV>(p)) return "exceptional_v";
  if (std::holds_alternative<ExceptionalVprime>(p)) return "exceptional_vprime";
  return "cuspidal(" + std::to_string(std::get<Cuspidal>(p).id) + ")";
}

inline bool dual_point_less(const DualPoint& a, const DualPoint& b) {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* sa = std::get_if<Spherical>(&a)) return sa->alpha < std::get<Spherical>(b).alpha;
  if (const auto* ca = std::get_if<Cuspidal>(&a)) return ca->id < std::get<Cuspidal>(b).id;
  return false;
}

// The lower endpoint of the two-orbit interval is not itself a spherical
// point: the parameter there names the two exceptional constituents.
inline void validate_point(const GroupKind& kind, const DualPoint& p) {
  validate(kind);
  bool vt = std::holds_alternative<VertexTransitive>(kind);
  if (const auto* s = std::get_if<Spherical>(&p)) {
    ClosedInterval iv = param_interval(kind);
    if (!iv.contains(s->alpha)) throw DomainError("spherical parameter outside the interval");
    if (!vt && s->alpha == iv.lo)
      throw DomainError("the endpoint parameter names the exceptional pair, not a spherical point");
    return;
  }
  if (std::holds_alternative<SpecialPlus>(p) || std::holds_alternative<SpecialMinus>(p)) {
    if (!vt) throw DomainError("signed special points require the vertex-transitive kind");
    return;
  }
  if (std::holds_alternative<SpecialSigma>(p) || std::holds_alternative<ExceptionalV>(p) ||
      std::holds_alternative<ExceptionalVprime>(p)) {
    if (vt) throw DomainError("this dual point requires the two-orbit kind");
    return;
  }
  if (const auto* c = std::get_if<Cuspidal>(&p)) {
    if (c->id < 0) throw DomainError("cuspidal index must be non-negative");
    return;
  }
}

// Set of limits of the spherical family as the parameter tends to
// alpha_star: a singleton in the interior, a two-point set at the glued
// endpoints.
inline std::vector<DualPoint> limit_set(const GroupKind& kind, const Rational& alpha_star) {
  validate(kind);
  ClosedInterval iv = param_interval(kind);
  if (!iv.contains(alpha_star)) throw DomainError("alpha outside the spherical parameter interval");
  if (std::holds_alternative<VertexTransitive>(kind)) {
    if (alpha_star == 1) return {Spherical{Rational(1)}, SpecialMinus{}};
    if (alpha_star == -1) return {Spherical{Rational(-1)}, SpecialPlus{}};
    return {Spherical{alpha_star}};
  }
  if (alpha_star == 1) return {Spherical{Rational(1)}, SpecialSigma{}};
  if (alpha_star == iv.lo) return {ExceptionalV{}, ExceptionalVprime{}};
  return {Spherical{alpha_star}};
}

inline std::vector<std::pair<DualPoint, DualPoint>> non_hausdorff_pairs(const GroupKind& kind) {
  validate(kind);
  if (std::holds_alternative<VertexTransitive>(kind))
    return {{Spherical{Rational(-1)}, SpecialPlus{}}, {Spherical{Rational(1)}, SpecialMinus{}}};
  return {{ExceptionalV{}, ExceptionalVprime{}}, {Spherical{Rational(1)}, SpecialSigma{}}};
}

// Points that cannot be separated from the trivial representation.
inline std::vector<DualPoint> cortex(const GroupKind& kind) {
  validate(kind);
  if (std::holds_alternative<VertexTransitive>(kind))
    return {Spherical{Rational(1)}, SpecialMinus{}};
  return {Spherical{Rational(1)}, SpecialSigma{}};
}

struct DualModel {
  GroupKind kind;
  ClosedInterval interval;
  std::vector<DualPoint> boundary_points;  // specials and exceptionals
  std::vector<DualPoint> cuspidal_points;
  bool cuspidal_axioms_assumed;  // the cuspidal count and isolation are inputs
  std::vector<std::pair<DualPoint, DualPoint>> non_hausdorff;
  std::vector<DualPoint> cortex_points;
  std::vector<DualPoint> dense_open_excluded;
};

inline DualModel dual_model(const GroupKind& kind, int cuspidal_count) {
  validate(kind);
  if (cuspidal_count < 0) throw DomainError("cuspidal count must be non-negative");
  DualModel m{kind, param_interval(kind), {}, {}, true, non_hausdorff_pairs(kind), cortex(kind), {}};
  if (std::holds_alternative<VertexTransitive>(kind)) {
    m.boundary_points = {SpecialPlus{}, SpecialMinus{}};
    m.dense_open_excluded = {SpecialPlus{}, SpecialMinus{}};
  } else {
    m.boundary_points = {SpecialSigma{}, ExceptionalV{}, ExceptionalVprime{}};
    m.dense_open_excluded = {SpecialSigma{}, ExceptionalV{}, ExceptionalVprime{}};
  }
  for (int i = 0; i < cuspidal_count; ++i) m.cuspidal_points.push_back(Cuspidal{i});
  return m;
}

// The model is T1: every singleton is closed, and the non-Hausdorff pairs
// only obstruct separation by disjoint open sets.
inline std::vector<DualPoint> closure(const DualModel& model, const DualPoint& p) {
  validate_point(model.kind, p);
  return {p};
}

inline bool is_isolated(const DualModel& model, const DualPoint& p) {
  validate_point(model.kind, p);
  return std::holds_alternative<Cuspidal>(p);
}

inline nlohmann::json dual_point_to_json(const DualPoint& p) {
  nlohmann::json j;
  j["name"] = to_string(p);
  if (const auto* s = std::get_if<Spherical>(&p)) j["alpha"] = to_string(s->alpha);
  if (const auto* c = std::get_if<Cuspidal>(&p)) j["id"] = c->id;
  return j;
}

inline nlohmann::json dual_model_to_json(const DualModel& m) {
  nlohmann::json j;
  if (const auto* vt = std::get_if<VertexTransitive>(&m.kind)) {
    j["kind"] = "vertex_transitive";
    j["d"] = vt->d;
  } else {
    const auto& two = std::get<TwoOrbits>(m.kind);
    j["kind"] = "two_orbit";
    j["d"] = two.d;
    j["dprime"] = two.dprime;
  }
  j["interval"] = {{"lo", to_string(m.interval.lo)}, {"hi", to_string(m.interval.hi)}};
  auto points = [](const std::vector<DualPoint>& v) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& p : v) a.push_back(dual_point_to_json(p));
    return a;
  };
  j["boundary_points"] = points(m.boundary_points);
  j["cuspidal_points"] = points(m.cuspidal_points);
  j["cuspidal_axioms_assumed"] = m.cuspidal_axioms_assumed;
  nlohmann::json pairs = nlohmann::json::array();
  for (const auto& [a, b] : m.non_hausdorff)
    pairs.push_back({dual_point_to_json(a), dual_point_to_json(b)});
  j["non_hausdorff_pairs"] = pairs;
  j["cortex"] = points(m.cortex_points);
  j["dense_open_excluded"] = points(m.dense_open_excluded);
  j["t1"] = true;
  return j;
}

}  // namespace treeharm
