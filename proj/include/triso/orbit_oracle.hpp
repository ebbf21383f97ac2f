#pragma once

// Two independent deciders for "B = g.A for some g": comparison of invariant
// tuples, and direct minimization of ||g.A - B||_F over the group.

#include <cstdint>
#include <optional>
#include <string_view>

#include "triso/invariants.hpp"
#include "triso/tensor.hpp"

namespace triso {

enum class Group { kO3, kSO3 };

struct AlignmentConfig {
  int starts = 128;
  int max_iterations = 100;
  /// A start stops early once the residual is below tolerance * max(1, ||B||).
  double tolerance = 1e-13;
  std::uint64_t seed = 0xa11;
};

struct AlignmentResult {
  OrthogonalTransform3 best_transform = OrthogonalTransform3::identity();
  double residual = 0.0;
  Group group = Group::kO3;
  int starts_used = 0;
};

/// Multi-start Levenberg-Marquardt over unit quaternions. For O(3) the
/// reflected branch -R is searched as well (det(-I) = -1 in three dimensions).
AlignmentResult best_alignment(const SymTraceless3& a, const SymTraceless3& b, Group group,
                               const AlignmentConfig& cfg = {});

enum class Verdict { kSame, kDifferent, kBorderline };

std::string_view to_string(Verdict v);

/// max_k |I_k(a) - I_k(b)| / S^(deg_k / 2), S = max(I2(a), I2(b)). Zero when
/// both tensors vanish.
double invariant_distance(const InvariantTuple& a, const InvariantTuple& b);

inline constexpr double kDefaultOrbitTolerance = 1e-8;

/// kSame for distance <= tol, kBorderline up to 10 * tol, kDifferent beyond.
Verdict same_orbit(const SymTraceless3& a, const SymTraceless3& b,
                   double tol = kDefaultOrbitTolerance);

struct OrbitComparison {
  Verdict verdict = Verdict::kSame;
  double invariant_distance = 0.0;
  std::optional<double> alignment_residual;
};

OrbitComparison compare_orbits(const SymTraceless3& a, const SymTraceless3& b, double tol,
                               bool run_alignment, const AlignmentConfig& cfg = {});

}  // namespace triso
