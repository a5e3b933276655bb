#pragma once

// Matrix coefficients of the special representations on the edge-stabilizer
// double cosets, the defining recurrence relations they satisfy, and the
// L^2 norms that certify square-integrability (discrete-series membership).

#include <map>
#include <string>

#include "treeharm/coset_measure.hpp"
#include "treeharm/errors.hpp"
#include "treeharm/rational.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

// The two sign choices on a regular tree, and the unique special
// representation of the type-preserving two-orbit kind.
enum class SpecialKind { VTPlus, VTMinus, TwoOrbitSigma };

inline std::string to_string(SpecialKind k) {
  switch (k) {
    case SpecialKind::VTPlus: return "vt_plus";
    case SpecialKind::VTMinus: return "vt_minus";
    case SpecialKind::TwoOrbitSigma: return "two_orbit_sigma";
  }
  throw DomainError("unknown special kind");
}

// Coefficient values on the double-coset representatives, normalized so the
// value at the identity coset is 1. Keys are the displacement indices:
// tau_n and tau_n_h over n in [-N, N], the k_v families over m in [1, N]
// (tau_negm_kv[m] is the value on the tau^{-(m-1)} k_v coset).
struct SpecialTable {
  SpecialKind kind;
  TreeParams params;
  long long N;
  std::map<long long, Rational> tau_n;
  std::map<long long, Rational> tau_n_h;
  std::map<long long, Rational> tau_m_kv;
  std::map<long long, Rational> tau_negm_kv;
};

inline void validate_special(SpecialKind kind, const TreeParams& params) {
  params.validate();
  if (kind != SpecialKind::TwoOrbitSigma && params.d0 != params.d1)
    throw DomainError("the single-orbit special kinds require equal degrees");
}

inline SpecialTable special_sequence(SpecialKind kind, const TreeParams& params, long long N) {
  validate_special(kind, params);
  if (N < 1) throw DomainError("special table depth must be at least 1");
  SpecialTable table{kind, params, N, {}, {}, {}, {}};
  if (kind == SpecialKind::TwoOrbitSigma) {
    Rational q = Rational(1) / ((params.d0 - 1) * (params.d1 - 1));
    for (long long n = -N; n <= N; ++n) table.tau_n[n] = pow_rational(q, n < 0 ? -n : n);
    for (long long m = 1; m <= N; ++m) {
      Rational a = pow_rational(Rational(params.d0 - 1), m);
      table.tau_m_kv[m] = -1 / (a * pow_rational(Rational(params.d1 - 1), m + 1));
      table.tau_negm_kv[m] = -1 / (a * pow_rational(Rational(params.d1 - 1), m - 1));
    }
    return table;
  }
  // On a regular tree the coset space is generated by the translation tau and
  // the inversion h; phi is determined by phi(h) = +-1 and a factor
  // -1/(d-1) per translation step.
  Rational eps(kind == SpecialKind::VTPlus ? 1 : -1);
  Rational t = Rational(-1) / (params.d0 - 1);
  for (long long n = -N; n <= N; ++n) {
    long long an = n < 0 ? -n : n;
    Rational scale = pow_rational(t, an);
    table.tau_n[n] = scale * (an % 2 == 1 ? eps : 1);
    table.tau_n_h[n] = scale * (an % 2 == 0 ? eps : 1);
  }
  return table;
}

struct RelationReport {
  bool ok;
  std::string relation;  // first violated relation, empty when ok
  long long n;           // index at which it fails
};

// Checks the defining one-step relations of the representation directly on a
// table of values; a table produced by special_sequence always passes, a
// perturbed one must fail.
inline RelationReport verify_table_relations(const SpecialTable& table) {
  const auto& p = table.params;
  if (table.kind == SpecialKind::TwoOrbitSigma) {
    Rational q = Rational(1) / ((p.d0 - 1) * (p.d1 - 1));
    for (long long n = 1; n <= table.N; ++n) {
      if (table.tau_n.at(n) != q * table.tau_n.at(n - 1))
        return {false, "phi(tau^n) = phi(tau^(n-1)) / ((d-1)(d'-1))", n};
      if (table.tau_n.at(-n) != q * table.tau_n.at(-(n - 1)))
        return {false, "phi(tau^-n) = phi(tau^-(n-1)) / ((d-1)(d'-1))", n};
      if (table.tau_m_kv.at(n) != Rational(-1) / (p.d1 - 1) * table.tau_n.at(n))
        return {false, "phi(tau^m k_v) = -phi(tau^m) / (d'-1)", n};
      if (table.tau_negm_kv.at(n) != Rational(-1) / (p.d0 - 1) * table.tau_n.at(-(n - 1)))
        return {false, "phi(tau^-(m-1) k_v) = -phi(tau^-(m-1)) / (d-1)", n};
    }
    return {true, "", 0};
  }
  Rational t = Rational(-1) / (p.d0 - 1);
  for (long long n = 1; n <= table.N; ++n) {
    if (table.tau_n.at(n) != t * table.tau_n_h.at(n - 1))
      return {false, "phi(tau^n) = -phi(tau^(n-1) h) / (d-1)", n};
    if (table.tau_n_h.at(-n) != t * table.tau_n.at(-(n - 1)))
      return {false, "phi(tau^-n h) = -phi(tau^-(n-1)) / (d-1)", n};
    if (table.tau_n_h.at(n) != t * table.tau_n.at(n - 1))
      return {false, "phi(tau^n h) = -phi(tau^(n-1)) / (d-1)", n};
    if (table.tau_n.at(-n) != t * table.tau_n_h.at(-(n - 1)))
      return {false, "phi(tau^-n) = -phi(tau^-(n-1) h) / (d-1)", n};
  }
  return {true, "", 0};
}

inline bool verify_defining_relations(SpecialKind kind, const TreeParams& params, long long N) {
  return verify_table_relations(special_sequence(kind, params, N)).ok;
}

// Truncation of sum mu(coset) |phi(coset)|^2 over the displacement indices
// up to N (|n| <= N for the two-sided families, m <= N for the k_v ones),
// with mu(Fix(e)) = 1.
inline Rational l2_partial(SpecialKind kind, const TreeParams& params, long long N) {
  validate_special(kind, params);
  if (N < 0) throw DomainError("truncation depth must be non-negative");
  GroupKind gk = kind == SpecialKind::TwoOrbitSigma
                     ? GroupKind(TwoOrbits{params.d0, params.d1})
                     : GroupKind(VertexTransitive{params.d0});
  SpecialTable table = special_sequence(kind, params, N >= 1 ? N : 1);
  Rational sum(0);
  auto add = [&](CosetFamilyTag tag, long long n, const Rational& value) {
    sum += edge_coset_measure({tag, n, gk}).value * value * value;
  };
  for (long long n = -N; n <= N; ++n) {
    add(CosetFamilyTag::EdgeCoset, n, table.tau_n.at(n));
    if (kind != SpecialKind::TwoOrbitSigma)
      add(CosetFamilyTag::EdgeCosetInversion, n, table.tau_n_h.at(n));
  }
  if (kind == SpecialKind::TwoOrbitSigma) {
    for (long long m = 1; m <= N; ++m) {
      add(CosetFamilyTag::EdgeCosetKv, m, table.tau_m_kv.at(m));
      add(CosetFamilyTag::EdgeCosetKvNeg, m, table.tau_negm_kv.at(m));
    }
  }
  return sum;
}

// Exact value of the full sum; finiteness is what places the representation
// in the discrete series.
inline Rational l2_closed_form(SpecialKind kind, const TreeParams& params) {
  validate_special(kind, params);
  if (kind != SpecialKind::TwoOrbitSigma) {
    if (params.d0 <= 2) throw DomainError("degree must be at least 3");
    return Rational(2 * params.d0) / (params.d0 - 2);
  }
  Rational q = Rational(1) / ((params.d0 - 1) * (params.d1 - 1));
  return (1 + q) / (1 - q) + Rational(1) / ((params.d0 - 1) * (1 - q)) +
         q * q / ((params.d1 - 1) * (1 - q));
}

}  // namespace treeharm
