#pragma once

// Spherical functions of the vertex-stabilizer Hecke pair: the exact
// three-term recursion in the Fix(v)-bi-invariant parameter alpha, the radial
// Gram matrices they induce on a ball, and the principal-series subfamily.

#include <complex>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "treeharm/coset_measure.hpp"
#include "treeharm/errors.hpp"
#include "treeharm/group_kind.hpp"
#include "treeharm/rational.hpp"
#include "treeharm/tree.hpp"

namespace treeharm {

struct ClosedInterval {
  Rational lo;
  Rational hi;
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

// Range of alpha = phi(tau) over the positive-definite spherical functions.
inline ClosedInterval param_interval(const GroupKind& kind) {
  validate(kind);
  if (std::holds_alternative<VertexTransitive>(kind)) return {Rational(-1), Rational(1)};
  const auto& two = std::get<TwoOrbits>(kind);
  return {Rational(-1, two.dprime - 1), Rational(1)};
}

// Whether alpha is the parameter of an actual (positive-definite) spherical
// function. The recursion itself runs for any alpha; callers that need
// unitarity must ask.
inline bool is_classified(const GroupKind& kind, const Rational& alpha) {
  return param_interval(kind).contains(alpha);
}

// phi(tau^0), ..., phi(tau^N). phi(tau) = alpha and each later value is the
// unique solution of the averaging identity over the d (resp. d, d')
// neighbours, which collapses to a constant-coefficient three-term recursion.
// Defined for every alpha, classified or not.
inline std::vector<Rational> spherical_sequence(const GroupKind& kind, const Rational& alpha,
                                                long long N) {
  validate(kind);
  if (N < 0) throw DomainError("sequence length must be non-negative");
  std::vector<Rational> phi;
  phi.reserve(static_cast<size_t>(N) + 1);
  phi.push_back(Rational(1));
  if (N == 0) return phi;
  phi.push_back(alpha);
  Rational c1, c2;
  if (const auto* vt = std::get_if<VertexTransitive>(&kind)) {
    Rational d(vt->d);
    c1 = d * alpha / (d - 1);
    c2 = Rational(1) / (d - 1);
  } else {
    const auto& two = std::get<TwoOrbits>(kind);
    Rational d(two.d), dp(two.dprime);
    c1 = d * alpha / (d - 1) - (dp - 2) / ((dp - 1) * (d - 1));
    c2 = Rational(1) / ((dp - 1) * (d - 1));
  }
  for (long long n = 2; n <= N; ++n) phi.push_back(c1 * phi[n - 1] - c2 * phi[n - 2]);
  return phi;
}

// Gram matrix of the spherical kernel on the center orbit inside a ball:
// rows and columns run over the vertices of the center's type, the entry is
// phi at the orbit distance d(x, y) / step.
inline Eigen::MatrixXd radial_gram(const Ball& ball, const GroupKind& kind,
                                   const Rational& alpha) {
  validate(kind);
  if (ball.center_kind != CenterKind::Vertex)
    throw DomainError("radial Gram matrix requires a vertex-centered ball");
  {
    TreeParams expect = params_with_base(kind, ball.root_type);
    if (!(expect == ball.params))
      throw DomainError("group kind degrees do not match the ball");
  }
  long long step = orbit_distance_step(kind);
  // One G-orbit of vertices: everything for a vertex-transitive group,
  // the root's type class otherwise. phi is defined on displacements
  // within a single orbit only.
  std::vector<int> orbit;
  for (int v = 0; v < ball.size(); ++v)
    if (step == 1 || ball.type_of(v) == ball.root_type) orbit.push_back(v);
  auto phi = spherical_sequence(kind, alpha, 2 * ball.radius / step + 1);
  Eigen::MatrixXd gram(orbit.size(), orbit.size());
  for (size_t i = 0; i < orbit.size(); ++i) {
    for (size_t j = i; j < orbit.size(); ++j) {
      long long dist = distance(ball, orbit[i], orbit[j]);
      if (dist % step != 0)
        throw DomainError("same-type vertices at a distance not divisible by the orbit step");
      double value = to_double(phi[static_cast<size_t>(dist / step)]);
      gram(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = value;
      gram(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = value;
    }
  }
  return gram;
}

struct PsdResult {
  bool psd;
  double min_eigenvalue;
};

inline PsdResult psd_check(const Eigen::MatrixXd& m, double tol) {
  if (m.rows() != m.cols()) throw DomainError("matrix must be square");
  if (!m.allFinite()) throw DomainError("matrix has non-finite entries");
  if (m.rows() == 0) return {true, 0.0};
  double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) throw DomainError("matrix is not symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw DomainError("eigenvalue computation failed");
  double min_eig = solver.eigenvalues().minCoeff();
  return {min_eig >= -tol, min_eig};
}

// Principal series: the spherical parameter of pi_s for |s| = 1.
inline double principal_param(const GroupKind& kind, std::complex<double> s) {
  validate(kind);
  if (std::abs(std::abs(s) - 1.0) > 1e-12)
    throw DomainError("principal series parameter must lie on the unit circle");
  if (const auto* vt = std::get_if<VertexTransitive>(&kind)) {
    double d = vt->d;
    return 2.0 * std::sqrt(d - 1.0) / d * s.real();
  }
  const auto& two = std::get<TwoOrbits>(kind);
  double d = two.d, dp = two.dprime;
  return 2.0 * std::sqrt(d - 1.0) / (d * std::sqrt(dp - 1.0)) * (s * s).real() +
         (dp - 2.0) / (d * (dp - 1.0));
}

// Exact range of the principal parameter: an interval symmetric about 0 for
// the single-orbit kind, about (d'-2)/(d(d'-1)) for the two-orbit kind.
inline std::pair<double, double> principal_interval(const GroupKind& kind) {
  validate(kind);
  if (const auto* vt = std::get_if<VertexTransitive>(&kind)) {
    double d = vt->d;
    double w = 2.0 * std::sqrt(d - 1.0) / d;
    return {-w, w};
  }
  const auto& two = std::get<TwoOrbits>(kind);
  double d = two.d, dp = two.dprime;
  double c = (dp - 2.0) / (d * (dp - 1.0));
  double w = 2.0 * std::sqrt(d - 1.0) / (d * std::sqrt(dp - 1.0));
  return {c - w, c + w};
}

}  // namespace treeharm
