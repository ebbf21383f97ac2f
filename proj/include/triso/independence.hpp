#pragma once

// Numerical evidence that I2, I4, I6, I10 are algebraically independent: the
// Jacobian of the canonical-coordinate polynomials with respect to
// (D111, D122, D123, D223) is generically nonsingular.

#include <array>
#include <cstdint>
#include <vector>

#include "triso/invariants.hpp"

namespace triso {

using Mat4 = std::array<std::array<double, 4>, 4>;

enum class JacobianMode { kAnalytic, kFiniteDifference };

/// Rows: I2, I4, I6, I10. Columns: d/dD111, d/dD122, d/dD123, d/dD223.
Mat4 jacobian_canonical(const CanonicalParams& c, JacobianMode mode);

/// Determinant by partial-pivot LU.
double determinant(const Mat4& m);

/// det of the analytic Jacobian at c, evaluated in extended precision.
double jacobian_determinant(const CanonicalParams& c);

/// Singular values, descending.
std::array<double, 4> singular_values(const Mat4& m);

/// Number of singular values above rel_threshold * largest.
int numerical_rank(const Mat4& m, double rel_threshold = 1e-10);

/// Each nonzero row divided by its Euclidean norm. Rank is unchanged, but the
/// invariant rows (degrees 2 to 10) no longer differ by orders of magnitude.
Mat4 equilibrate_rows(const Mat4& m);

/// Factors of the closed-form det(Jac); their product is the determinant.
const std::vector<CanonicalPolynomial>& det_jacobian_factors();
/// The closed-form determinant expanded into a single monomial table.
const CanonicalPolynomial& det_jacobian_polynomial();

double det_jacobian_closed_form(const CanonicalParams& c);

/// Largest entry deviation between two Jacobians, each row scaled by
/// max(1, largest |entry| in that row of `reference`).
double jacobian_deviation(const Mat4& reference, const Mat4& other);

struct JacobianReport {
  CanonicalParams point;
  Mat4 jac{};
  double det = 0.0;
  double closed_form_det = 0.0;
  double fd_deviation = 0.0;
  /// |det - closed_form_det| / max(1, |det|)
  double det_deviation = 0.0;
  int rank = 0;
  /// Point lies within the degeneracy margin of D123 = 0 or D223 = 0.
  bool degenerate = false;
};

inline constexpr double kDegeneracyMargin = 1e-6;

JacobianReport analyze_point(const CanonicalParams& c);

struct IndependenceConfig {
  int sample_count = 1000;
  std::uint64_t seed = 0;
  /// Points are drawn uniformly from [-box, box]^4.
  double box = 2.0;
};

struct IndependenceReport {
  int samples = 0;
  int generic_samples = 0;
  int degenerate_samples = 0;
  int rank4_count = 0;
  double rank4_fraction = 0.0;
  double min_abs_det = 0.0;
  double max_abs_det = 0.0;
  double max_fd_deviation = 0.0;
  double max_det_deviation = 0.0;
};

/// Draws sample_count points; points within kDegeneracyMargin of the
/// D123 = 0 or D223 = 0 hyperplanes count as degenerate and are excluded
/// from the generic statistics. Throws ValidationError for sample_count < 1.
IndependenceReport independence_report(const IndependenceConfig& cfg);

/// Aggregates already analyzed points with the same rules.
IndependenceReport summarize(const std::vector<JacobianReport>& points);

}  // namespace triso
