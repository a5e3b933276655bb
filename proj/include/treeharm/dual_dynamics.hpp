#pragma once

// Restriction to and induction from the type-preserving index-2 subgroup of
// the full automorphism group of a regular tree, expressed on the spherical
// parameters, plus the corresponding moves for the special representations
// and the base-vertex change inside the two-orbit parametrization.

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "treeharm/errors.hpp"
#include "treeharm/rational.hpp"

namespace treeharm {

// Restriction of the parameter-alpha spherical representation: irreducible
// with parameter gamma except at alpha = 0, where it splits into the two
// exceptional constituents.
struct RestrictSingle {
  Rational gamma;
};
struct ExceptionalPair {};
using RestrictResult = std::variant<RestrictSingle, ExceptionalPair>;

inline RestrictResult restrict_to_plus(int d, const Rational& alpha) {
  if (d < 3) throw DomainError("degree must be at least 3");
  if (alpha < -1 || alpha > 1) throw DomainError("alpha outside [-1, 1]");
  if (alpha == 0) return ExceptionalPair{};
  return RestrictSingle{(d * alpha * alpha - 1) / (d - 1)};
}

// A possibly irrational value sqrt(radicand); exact_value is meaningful only
// when the radicand is a perfect rational square.
struct RootValue {
  double value;
  bool exact;
  Rational exact_value;
};

struct InducePair {
  RootValue alpha_plus;
  RootValue alpha_minus;
};
struct ExceptionalImage {
  Rational alpha;  // always 0
};
using InduceResult = std::variant<InducePair, ExceptionalImage>;

inline InduceResult induce_from_plus(int d, const Rational& gamma) {
  if (d < 3) throw DomainError("degree must be at least 3");
  Rational lo = Rational(-1) / (d - 1);
  if (gamma < lo || gamma > 1)
    throw DomainError("gamma outside [-1/(d-1), 1]");
  Rational radicand = ((d - 1) * gamma + 1) / d;
  if (radicand == 0) return ExceptionalImage{Rational(0)};
  auto root = exact_sqrt(radicand);
  RootValue plus{std::sqrt(to_double(radicand)), root.has_value(),
                 root.has_value() ? *root : Rational(0)};
  RootValue minus{-plus.value, plus.exact, -plus.exact_value};
  return InducePair{plus, minus};
}

// Re-expresses a two-orbit spherical parameter based at a degree-d vertex in
// the parametrization based at the adjacent degree-d' vertex. The map is
// affine, fixes 1, and exchanges the exceptional endpoints.
struct BaseChangeResult {
  Rational alpha_vprime;
  bool exceptional_endpoint;
};

inline BaseChangeResult base_change(int d, int dprime, const Rational& alpha_v) {
  if (d < 3 || dprime < 3) throw DomainError("degrees must be at least 3");
  Rational lo = Rational(-1) / (dprime - 1);
  if (alpha_v < lo || alpha_v > 1)
    throw DomainError("alpha outside [-1/(d'-1), 1]");
  Rational image = Rational(d * (dprime - 1)) / (dprime * (d - 1)) * alpha_v +
                   Rational(d - dprime) / (dprime * (d - 1));
  return BaseChangeResult{image, alpha_v == lo};
}

// Induction/restriction table for the special representations: sigma of the
// type-preserving subgroup induces to the direct sum of the two signed
// specials, and each of those restricts back to sigma.
struct SpecialDynamicsRow {
  std::string op;  // "Ind" or "Res"
  std::string source;
  std::vector<std::string> images;
};

inline std::vector<SpecialDynamicsRow> special_dynamics(int d) {
  if (d < 3) throw DomainError("degree must be at least 3");
  return {{"Ind", "sigma", {"sigma_plus", "sigma_minus"}},
          {"Res", "sigma_plus", {"sigma"}},
          {"Res", "sigma_minus", {"sigma"}}};
}

}  // namespace treeharm
