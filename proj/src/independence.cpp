#include "triso/independence.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

namespace triso {

namespace {

using Jacobian = std::array<std::array<CanonicalPolynomial, 4>, 4>;

const Jacobian& jacobian_polynomials() {
  static const Jacobian table = [] {
    Jacobian j;
    const auto& polys = canonical_invariant_polynomials();
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 4; ++c) j[r][c] = polys[r].derivative(c);
    return j;
  }();
  return table;
}

std::vector<CanonicalPolynomial> build_det_factors() {
  using P = CanonicalPolynomial;
  const P a = P::variable(0);  // D111
  const P b = P::variable(1);  // D122
  const P c = P::variable(2);  // D123
  const P d = P::variable(3);  // D223
  const auto sq = [](const P& x) { return x * x; };

  const P quartic = 9.0 * a.pow(4) + 24.0 * b * a.pow(3) - 24.0 * (sq(b) + sq(c)) * sq(a) -
                    32.0 * b * (3.0 * sq(b) + sq(c)) * a +
                    16.0 * (-3.0 * b.pow(4) - 2.0 * sq(c) * sq(b) + c.pow(4));

  const P big =
      16.0 * (3.0 * sq(b) - sq(d)) * a.pow(8) + 32.0 * (b.pow(3) + 3.0 * sq(c) * b) * a.pow(7) -
      8.0 *
          (18.0 * b.pow(4) + 3.0 * (4.0 * sq(c) + 3.0 * sq(d)) * sq(b) - 6.0 * c.pow(4) -
           5.0 * d.pow(4) - 18.0 * sq(c) * sq(d)) *
          a.pow(6) -
      24.0 * b *
          (8.0 * b.pow(4) + (16.0 * sq(c) - sq(d)) * sq(b) + 8.0 * c.pow(4) + d.pow(4) +
           3.0 * sq(c) * sq(d)) *
          a.pow(5) -
      (64.0 * b.pow(6) + 48.0 * (4.0 * sq(c) - 7.0 * sq(d)) * b.pow(4) +
       3.0 * (64.0 * c.pow(4) + 96.0 * sq(d) * sq(c) + 7.0 * d.pow(4)) * sq(b) +
       64.0 * c.pow(6) + 25.0 * d.pow(6) + 132.0 * sq(c) * d.pow(4) +
       240.0 * c.pow(4) * sq(d)) *
          a.pow(4) +
      6.0 * b * sq(d) *
          (48.0 * b.pow(4) + 4.0 * (8.0 * sq(c) - 3.0 * sq(d)) * sq(b) - 16.0 * c.pow(4) +
           5.0 * d.pow(4) - 8.0 * sq(c) * sq(d)) *
          a.pow(3) +
      4.0 * sq(d) *
          (16.0 * b.pow(6) + 6.0 * (8.0 * sq(c) - 7.0 * sq(d)) * b.pow(4) +
           (48.0 * c.pow(4) + 78.0 * sq(d) * sq(c) + 9.0 * d.pow(4)) * sq(b) +
           16.0 * c.pow(6) + 3.0 * sq(c) * d.pow(4) + 12.0 * c.pow(4) * sq(d)) *
          sq(a) -
      8.0 * b * (sq(b) - 3.0 * sq(c)) * d.pow(4) * (12.0 * sq(b) - sq(d)) * a -
      16.0 * sq(b.pow(3) - 3.0 * b * sq(c)) * d.pow(4);

  return {27648.0 * c, quartic, d.pow(3), big};
}

}  // namespace

Mat4 jacobian_canonical(const CanonicalParams& c, JacobianMode mode) {
  Mat4 jac{};
  const auto x = c.to_array();
  if (mode == JacobianMode::kAnalytic) {
    const Jacobian& dp = jacobian_polynomials();
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t k = 0; k < 4; ++k) jac[r][k] = dp[r][k].evaluate(x);
    return jac;
  }
  for (std::size_t k = 0; k < 4; ++k) {
    const double h = 1e-5 * std::max(1.0, std::abs(x[k]));
    auto plus = x;
    auto minus = x;
    plus[k] += h;
    minus[k] -= h;
    const auto fp = canonical_invariants(CanonicalParams::from_array(plus)).to_array();
    const auto fm = canonical_invariants(CanonicalParams::from_array(minus)).to_array();
    for (std::size_t r = 0; r < 4; ++r) jac[r][k] = (fp[r] - fm[r]) / (plus[k] - minus[k]);
  }
  return jac;
}

namespace {

template <class T>
T lu_determinant(std::array<std::array<T, 4>, 4> m) {
  T det = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(m[r][col]) > std::abs(m[pivot][col])) pivot = r;
    if (m[pivot][col] == 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < 4; ++r) {
      const T factor = m[r][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[r][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace

double determinant(const Mat4& m) { return lu_determinant(m); }

double jacobian_determinant(const CanonicalParams& c) {
  // The entries span many orders of magnitude and the determinant cancels
  // heavily, so both the entries and the elimination use long double.
  const auto x = c.to_array();
  const Jacobian& dp = jacobian_polynomials();
  std::array<std::array<long double, 4>, 4> m{};
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t k = 0; k < 4; ++k) m[r][k] = dp[r][k].evaluate_as<long double>(x);
  return static_cast<double>(lu_determinant(m));
}

std::array<double, 4> singular_values(const Mat4& m) {
  Eigen::Matrix4d e;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) e(r, c) = m[r][c];
  const Eigen::JacobiSVD<Eigen::Matrix4d> svd(e);
  const auto& s = svd.singularValues();
  return {s(0), s(1), s(2), s(3)};
}

int numerical_rank(const Mat4& m, double rel_threshold) {
  const auto s = singular_values(m);
  if (s[0] == 0.0) return 0;
  return static_cast<int>(
      std::count_if(s.begin(), s.end(), [&](double x) { return x > rel_threshold * s[0]; }));
}

Mat4 equilibrate_rows(const Mat4& m) {
  Mat4 out = m;
  for (auto& row : out) {
    double n = 0.0;
    for (double v : row) n += v * v;
    n = std::sqrt(n);
    if (n > 0.0)
      for (double& v : row) v /= n;
  }
  return out;
}

const std::vector<CanonicalPolynomial>& det_jacobian_factors() {
  static const std::vector<CanonicalPolynomial> factors = build_det_factors();
  return factors;
}

const CanonicalPolynomial& det_jacobian_polynomial() {
  static const CanonicalPolynomial expanded = [] {
    CanonicalPolynomial p(1.0);
    for (const auto& f : det_jacobian_factors()) p *= f;
    return p;
  }();
  return expanded;
}

double det_jacobian_closed_form(const CanonicalParams& c) {
  const auto x = c.to_array();
  double product = 1.0;
  for (const auto& f : det_jacobian_factors()) product *= f.evaluate(x);
  return product;
}

double jacobian_deviation(const Mat4& reference, const Mat4& other) {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r) {
    double row_scale = 1.0;
    for (int k = 0; k < 4; ++k) row_scale = std::max(row_scale, std::abs(reference[r][k]));
    for (int k = 0; k < 4; ++k)
      worst = std::max(worst, std::abs(reference[r][k] - other[r][k]) / row_scale);
  }
  return worst;
}

JacobianReport analyze_point(const CanonicalParams& c) {
  JacobianReport rep;
  rep.point = c;
  rep.jac = jacobian_canonical(c, JacobianMode::kAnalytic);
  rep.det = jacobian_determinant(c);
  rep.closed_form_det = det_jacobian_closed_form(c);
  rep.fd_deviation =
      jacobian_deviation(rep.jac, jacobian_canonical(c, JacobianMode::kFiniteDifference));
  rep.det_deviation = std::abs(rep.det - rep.closed_form_det) / std::max(1.0, std::abs(rep.det));
  rep.rank = numerical_rank(equilibrate_rows(rep.jac));
  rep.degenerate = std::abs(c.d123) <= kDegeneracyMargin || std::abs(c.d223) <= kDegeneracyMargin;
  return rep;
}

IndependenceReport summarize(const std::vector<JacobianReport>& points) {
  IndependenceReport out;
  out.samples = static_cast<int>(points.size());
  out.min_abs_det = std::numeric_limits<double>::infinity();
  for (const auto& p : points) {
    out.max_fd_deviation = std::max(out.max_fd_deviation, p.fd_deviation);
    out.max_det_deviation = std::max(out.max_det_deviation, p.det_deviation);
    if (p.degenerate) {
      ++out.degenerate_samples;
      continue;
    }
    ++out.generic_samples;
    if (p.rank == 4) ++out.rank4_count;
    const double a = std::abs(p.det);
    out.min_abs_det = std::min(out.min_abs_det, a);
    out.max_abs_det = std::max(out.max_abs_det, a);
  }
  if (out.generic_samples == 0) {
    out.min_abs_det = 0.0;
  } else {
    out.rank4_fraction = static_cast<double>(out.rank4_count) / out.generic_samples;
  }
  return out;
}

IndependenceReport independence_report(const IndependenceConfig& cfg) {
  if (cfg.sample_count < 1) throw ValidationError("independence report needs sample_count >= 1");
  if (!(cfg.box > 0.0)) throw ValidationError("sampling box must be positive");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> uniform(-cfg.box, cfg.box);
  std::vector<JacobianReport> points;
  points.reserve(cfg.sample_count);
  for (int n = 0; n < cfg.sample_count; ++n) {
    std::array<double, 4> x{};
    for (double& v : x) v = uniform(rng);
    points.push_back(analyze_point(CanonicalParams::from_array(x)));
  }
  return summarize(points);
}

}  // namespace triso
