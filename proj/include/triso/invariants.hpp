#pragma once

// The Smith-Bao minimal integrity basis {I2, I4, I6, I10} of St(3,3),
// evaluated two independent ways: by full index contraction and by the
// closed-form polynomials in canonical coordinates.

#include <array>

#include "triso/polynomial.hpp"
#include "triso/tensor.hpp"

namespace triso {

struct InvariantTuple {
  double i2 = 0.0;
  double i4 = 0.0;
  double i6 = 0.0;
  double i10 = 0.0;

  std::array<double, 4> to_array() const { return {i2, i4, i6, i10}; }
  friend bool operator==(const InvariantTuple&, const InvariantTuple&) = default;
};

inline constexpr std::array<const char*, 4> kInvariantNames = {"I2", "I4", "I6", "I10"};
inline constexpr std::array<int, 4> kInvariantDegrees = {2, 4, 6, 10};

/// Free components of a tensor in canonical coordinates, where
/// D112 = D113 = D222 = 0. Canonicalization guarantees d111 >= 0, but the
/// polynomials below accept any sign.
struct CanonicalParams {
  double d111 = 0.0;
  double d122 = 0.0;
  double d123 = 0.0;
  double d223 = 0.0;

  std::array<double, 4> to_array() const { return {d111, d122, d123, d223}; }
  static CanonicalParams from_array(const std::array<double, 4>& c) {
    return {c[0], c[1], c[2], c[3]};
  }
  SymTraceless3 to_tensor() const { return {d111, 0.0, 0.0, d122, d123, 0.0, d223}; }
  friend bool operator==(const CanonicalParams&, const CanonicalParams&) = default;
};

inline constexpr std::array<const char*, 4> kCanonicalNames = {"D111", "D122", "D123", "D223"};

/// |a - b| / max(1, |a|, |b|)
double relative_error(double a, double b);
/// Componentwise maximum of relative_error.
double relative_error(const InvariantTuple& a, const InvariantTuple& b);

/// M_kl = D_ijk D_ijl
Mat3 contraction_matrix(const FullTensor3& f);

/// v_p = D_ijk D_ijl D_klp
Vec3 v_vector(const SymTraceless3& s);

InvariantTuple smith_bao(const SymTraceless3& s);
InvariantTuple smith_bao(const FullTensor3& f);

using CanonicalPolynomial = Polynomial<4>;

/// I2, I4, I6, I10 as polynomials in (D111, D122, D123, D223). Built once.
const std::array<CanonicalPolynomial, 4>& canonical_invariant_polynomials();

InvariantTuple canonical_invariants(const CanonicalParams& c);

}  // namespace triso
