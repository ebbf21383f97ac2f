#include "triso/invariants.hpp"

#include <algorithm>
#include <cmath>

namespace triso {

double relative_error(double a, double b) {
  return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

double relative_error(const InvariantTuple& a, const InvariantTuple& b) {
  const auto x = a.to_array();
  const auto y = b.to_array();
  double worst = 0.0;
  for (std::size_t n = 0; n < x.size(); ++n) worst = std::max(worst, relative_error(x[n], y[n]));
  return worst;
}

Mat3 contraction_matrix(const FullTensor3& f) {
  Mat3 m{};
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) {
      double s = 0.0;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) s += f(i, j, k) * f(i, j, l);
      m[k][l] = s;
    }
  return m;
}

namespace {

Vec3 v_vector(const FullTensor3& f, const Mat3& m) {
  Vec3 v{};
  for (int p = 0; p < 3; ++p) {
    double s = 0.0;
    for (int k = 0; k < 3; ++k)
      for (int l = 0; l < 3; ++l) s += m[k][l] * f(k, l, p);
    v[p] = s;
  }
  return v;
}

}  // namespace

Vec3 v_vector(const SymTraceless3& s) {
  const FullTensor3 f = expand(s);
  return v_vector(f, contraction_matrix(f));
}

InvariantTuple smith_bao(const FullTensor3& f) {
  InvariantTuple out;
  for (double x : f.entries()) out.i2 += x * x;

  const Mat3 m = contraction_matrix(f);
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l) out.i4 += m[k][l] * m[k][l];

  const Vec3 v = v_vector(f, m);
  out.i6 = dot(v, v);
  out.i10 = cubic_form(f, v);
  return out;
}

InvariantTuple smith_bao(const SymTraceless3& s) { return smith_bao(expand(s)); }

namespace {

std::array<CanonicalPolynomial, 4> build_canonical_polynomials() {
  using P = CanonicalPolynomial;
  const P a = P::variable(0);  // D111
  const P b = P::variable(1);  // D122
  const P c = P::variable(2);  // D123
  const P d = P::variable(3);  // D223
  const auto sq = [](const P& x) { return x * x; };

  const P i2 = 4.0 * sq(a) + 6.0 * b * a + 6.0 * sq(b) + 6.0 * sq(c) + 4.0 * sq(d);

  const P i4 =
      2.0 * (4.0 * a.pow(4) + 12.0 * b * a.pow(3) +
             (18.0 * sq(b) + 12.0 * sq(c) + 5.0 * sq(d)) * sq(a) +
             12.0 * b * (sq(b) + sq(c) + sq(d)) * a + 6.0 * b.pow(4) + 6.0 * c.pow(4) +
             4.0 * d.pow(4) + 12.0 * sq(c) * sq(d) + 12.0 * sq(b) * (sq(c) + sq(d)));

  const P i6 =
      4.0 * (4.0 * (sq(b) + sq(d)) * a.pow(4) + 8.0 * b * (sq(b) + sq(c) + 3.0 * sq(d)) * a.pow(3) +
             (4.0 * b.pow(4) + (8.0 * sq(c) + 37.0 * sq(d)) * sq(b) + 4.0 * c.pow(4) + d.pow(4) -
              3.0 * sq(c) * sq(d)) *
                 sq(a) +
             4.0 * b * (5.0 * sq(b) - 7.0 * sq(c)) * sq(d) * a +
             4.0 * sq(sq(b) + sq(c)) * sq(d));

  const P i10 =
      -8.0 *
      (8.0 * (b.pow(3) - 3.0 * b * sq(d)) * a.pow(7) +
       4.0 * (6.0 * b.pow(4) + (6.0 * sq(c) - 39.0 * sq(d)) * sq(b) - 5.0 * d.pow(4) -
              6.0 * sq(c) * sq(d)) *
           a.pow(6) +
       6.0 * b *
           (4.0 * b.pow(4) + (8.0 * sq(c) - 73.0 * sq(d)) * sq(b) + 4.0 * c.pow(4) -
            21.0 * d.pow(4) - 8.0 * sq(c) * sq(d)) *
           a.pow(5) +
       (8.0 * b.pow(6) + 24.0 * (sq(c) - 26.0 * sq(d)) * b.pow(4) +
        3.0 * (8.0 * c.pow(4) - 28.0 * sq(d) * sq(c) - 109.0 * d.pow(4)) * sq(b) +
        8.0 * c.pow(6) + d.pow(6) + 72.0 * sq(c) * d.pow(4) + 84.0 * c.pow(4) * sq(d)) *
           a.pow(4) -
       2.0 * b * sq(d) *
           (231.0 * b.pow(4) + 2.0 * (69.0 * sq(c) + 101.0 * sq(d)) * sq(b) - 45.0 * c.pow(4) -
            78.0 * sq(c) * sq(d)) *
           a.pow(3) -
       6.0 * sq(d) *
           (28.0 * b.pow(6) + (32.0 * sq(c) + 41.0 * sq(d)) * b.pow(4) +
            2.0 * (6.0 * c.pow(4) - 11.0 * sq(c) * sq(d)) * sq(b) + 8.0 * c.pow(6) +
            9.0 * c.pow(4) * sq(d)) *
           sq(a) -
       24.0 * b * sq(d) *
           (b.pow(6) - (sq(c) - 3.0 * sq(d)) * b.pow(4) -
            (5.0 * c.pow(4) + 14.0 * sq(d) * sq(c)) * sq(b) -
            c.pow(4) * (3.0 * sq(c) + sq(d))) *
           a +
       8.0 * (-b.pow(6) + 15.0 * sq(c) * b.pow(4) - 15.0 * c.pow(4) * sq(b) + c.pow(6)) *
           d.pow(4));

  return {i2, i4, i6, i10};
}

}  // namespace

const std::array<CanonicalPolynomial, 4>& canonical_invariant_polynomials() {
  static const std::array<CanonicalPolynomial, 4> table = build_canonical_polynomials();
  return table;
}

InvariantTuple canonical_invariants(const CanonicalParams& c) {
  const auto& polys = canonical_invariant_polynomials();
  const auto x = c.to_array();
  return {polys[0].evaluate(x), polys[1].evaluate(x), polys[2].evaluate(x), polys[3].evaluate(x)};
}

}  // namespace triso
