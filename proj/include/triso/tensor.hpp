#pragma once

// Third-order three-dimensional symmetric traceless tensors and the O(3)
// action on them.
//
// Indices are 0-based in code. Component names (d111 ... d223) keep the
// 1-based convention used throughout the literature and the JSON interface.

#include <array>
#include <cstdint>
#include <span>

#include "triso/errors.hpp"

namespace triso {

using Vec3 = std::array<double, 3>;
using Mat3 = std::array<Vec3, 3>;

/// The seven free components of a tensor in St(3,3). All other entries are
/// fixed by full symmetry and the vanishing of every trace.
struct SymTraceless3 {
  double d111 = 0.0;
  double d112 = 0.0;
  double d113 = 0.0;
  double d122 = 0.0;
  double d123 = 0.0;
  double d222 = 0.0;
  double d223 = 0.0;

  static constexpr std::size_t kSize = 7;

  std::array<double, kSize> to_array() const {
    return {d111, d112, d113, d122, d123, d222, d223};
  }
  static SymTraceless3 from_array(std::span<const double, kSize> c) {
    return {c[0], c[1], c[2], c[3], c[4], c[5], c[6]};
  }

  bool is_finite() const;
  bool is_zero() const;

  SymTraceless3 scaled(double t) const;

  friend bool operator==(const SymTraceless3&, const SymTraceless3&) = default;
};

/// Conventional names of the free components, in storage order.
inline constexpr std::array<const char*, SymTraceless3::kSize> kComponentNames = {
    "D111", "D112", "D113", "D122", "D123", "D222", "D223"};

/// Dense 3x3x3 array, row-major (i slowest).
class FullTensor3 {
 public:
  FullTensor3() { entries_.fill(0.0); }
  explicit FullTensor3(const std::array<double, 27>& entries) : entries_(entries) {}

  double operator()(int i, int j, int k) const { return entries_[index(i, j, k)]; }
  double& operator()(int i, int j, int k) { return entries_[index(i, j, k)]; }

  const std::array<double, 27>& entries() const { return entries_; }

  /// Largest |T_ijk - T_sigma(ijk)| over all slot permutations.
  double symmetry_violation() const;
  /// Largest |sum_i T_iik| over the free index k.
  double trace_violation() const;
  double frobenius_norm() const;

 private:
  static constexpr int index(int i, int j, int k) { return 9 * i + 3 * j + k; }
  std::array<double, 27> entries_;
};

double frobenius_distance(const FullTensor3& a, const FullTensor3& b);

/// An element of O(3). Only constructible from a matrix that passes the
/// orthogonality check, so every instance satisfies m^T m = I.
class OrthogonalTransform3 {
 public:
  static constexpr double kDefaultTolerance = 1e-12;

  /// Throws ValidationError if |m^T m - I| or ||det m| - 1| exceeds tol.
  static OrthogonalTransform3 from_matrix(const Mat3& m, double tol = kDefaultTolerance);
  static OrthogonalTransform3 identity();

  const Mat3& matrix() const { return m_; }
  int det_sign() const { return det_sign_; }
  bool proper() const { return det_sign_ > 0; }

  Vec3 apply(const Vec3& x) const;
  OrthogonalTransform3 inverse() const;

  /// Composition: (a * b) acts as a after b.
  friend OrthogonalTransform3 operator*(const OrthogonalTransform3& a,
                                        const OrthogonalTransform3& b);

 private:
  OrthogonalTransform3(const Mat3& m, int det_sign) : m_(m), det_sign_(det_sign) {}
  Mat3 m_;
  int det_sign_;
};

// Small fixed-size linear algebra used across the library.
Mat3 multiply(const Mat3& a, const Mat3& b);
Mat3 transpose(const Mat3& a);
double determinant(const Mat3& a);
double dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
double norm(const Vec3& a);
/// max |a^T a - I| entrywise.
double orthogonality_defect(const Mat3& a);

FullTensor3 expand(const SymTraceless3& s);

inline constexpr double kCompressTolerance = 1e-9;

/// Extracts the free components. Throws ValidationError naming the worst
/// symmetry or trace violation when either exceeds tol.
SymTraceless3 compress(const FullTensor3& f, double tol = kCompressTolerance);

/// (g.T)_{abc} = g_ai g_bj g_ck T_ijk
FullTensor3 act(const OrthogonalTransform3& g, const FullTensor3& f);
SymTraceless3 act(const OrthogonalTransform3& g, const SymTraceless3& s);

/// g(x) = T_ijk x_i x_j x_k
double cubic_form(const FullTensor3& f, const Vec3& x);
/// grad g(x) = 3 T_ijk x_j x_k
Vec3 cubic_gradient(const FullTensor3& f, const Vec3& x);
/// Hessian of g: 6 T_ijk x_k
Mat3 cubic_hessian(const FullTensor3& f, const Vec3& x);

SymTraceless3 random_tensor(std::uint64_t seed, double scale = 1.0);
OrthogonalTransform3 random_orthogonal(std::uint64_t seed, bool proper);

/// Dimension of St(m, n): C(n+m-1, n-1) - C(n+m-3, n-1).
long long st_dimension(int order, int dim);

}  // namespace triso
