#pragma once

// Canonicalization of D in St(3,3) through the cubic form g(x) = D_ijk x_i x_j x_k:
// a maximizer u of g on the unit sphere is rotated to e1, which forces
// D112 = D113 = 0 and D111 = g(u) >= 0; a rotation about e1 then moves a zero
// of g on the great circle x1 = 0 to e2, forcing D222 = 0.

#include <cstdint>

#include "triso/invariants.hpp"
#include "triso/tensor.hpp"

namespace triso {

struct SphereConfig {
  /// Deterministic quasi-uniform starts (Fibonacci lattice).
  int lattice_starts = 64;
  /// Additional uniformly random starts drawn from `seed`.
  int random_starts = 16;
  std::uint64_t seed = 0x5eed;
  int max_iterations = 500;
  /// Bound on the tangential gradient norm, relative to max(1, ||D||_F).
  double stationarity_tolerance = 1e-12;
};

struct SphereMaximizer {
  Vec3 u{1.0, 0.0, 0.0};
  double value = 0.0;
  double residual = 0.0;
  int starts_converged = 0;
  int total_iterations = 0;
};

/// Multi-start Riemannian ascent with Newton polishing. Among converged
/// stationary points the best value wins; values within 1e-12 are broken
/// by the lexicographically largest u. Throws NumericalError if no start
/// reaches the stationarity tolerance.
SphereMaximizer maximize_cubic_on_sphere(const SymTraceless3& s, const SphereConfig& cfg = {});

/// || grad g(x) - (x . grad g(x)) x ||, for unit x.
double stationarity_residual(const SymTraceless3& s, const Vec3& x);

/// Proper rotation R with first row u (so R u = e1): the minimal rotation
/// taking u to e1, i.e. the identity for u = e1 and a quarter turn about e3
/// for u = e2.
OrthogonalTransform3 rotation_to_e1(const Vec3& u);

/// Smallest theta in [0, pi) with g(0, cos theta, sin theta) = 0, located by
/// a sign-change scan and bisection. Requires D112, D113 ~ 0.
double circle_zero_angle(const SymTraceless3& aligned);

/// Rotation about e1 taking (0, cos theta, sin theta) to e2.
OrthogonalTransform3 rotation_about_e1(double theta);

struct CanonicalDiagnostics {
  int starts_converged = 0;
  int total_iterations = 0;
  double sphere_residual = 0.0;
  double theta = 0.0;
  /// |D222| of the rotated tensor before it is dropped from the parameters.
  double circle_residual = 0.0;
};

struct CanonicalResult {
  CanonicalParams params;
  /// The rotated tensor itself; D112, D113, D222 are near zero but retained.
  SymTraceless3 aligned;
  OrthogonalTransform3 transform = OrthogonalTransform3::identity();
  double max_value = 0.0;
  CanonicalDiagnostics diagnostics;
};

CanonicalResult canonicalize(const SymTraceless3& s, const SphereConfig& cfg = {});

}  // namespace triso
