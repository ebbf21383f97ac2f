#include "triso/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace triso {

bool SymTraceless3::is_finite() const {
  const auto c = to_array();
  return std::all_of(c.begin(), c.end(), [](double x) { return std::isfinite(x); });
}

bool SymTraceless3::is_zero() const {
  const auto c = to_array();
  return std::all_of(c.begin(), c.end(), [](double x) { return x == 0.0; });
}

SymTraceless3 SymTraceless3::scaled(double t) const {
  auto c = to_array();
  for (double& x : c) x *= t;
  return from_array(c);
}

double FullTensor3::symmetry_violation() const {
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const double t = (*this)(i, j, k);
        worst = std::max({worst, std::abs(t - (*this)(i, k, j)), std::abs(t - (*this)(j, i, k)),
                          std::abs(t - (*this)(j, k, i)), std::abs(t - (*this)(k, i, j)),
                          std::abs(t - (*this)(k, j, i))});
      }
  return worst;
}

double FullTensor3::trace_violation() const {
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    double tr = 0.0;
    for (int i = 0; i < 3; ++i) tr += (*this)(i, i, k);
    worst = std::max(worst, std::abs(tr));
  }
  return worst;
}

double FullTensor3::frobenius_norm() const {
  double s = 0.0;
  for (double x : entries_) s += x * x;
  return std::sqrt(s);
}

double frobenius_distance(const FullTensor3& a, const FullTensor3& b) {
  double s = 0.0;
  for (std::size_t n = 0; n < 27; ++n) {
    const double d = a.entries()[n] - b.entries()[n];
    s += d * d;
  }
  return std::sqrt(s);
}

// ---------------------------------------------------------------------------
// 3x3 helpers

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += a[i][k] * b[k][j];
      c[i][j] = s;
    }
  return c;
}

Mat3 transpose(const Mat3& a) {
  Mat3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

double determinant(const Mat3& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

double orthogonality_defect(const Mat3& a) {
  const Mat3 ata = multiply(transpose(a), a);
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst, std::abs(ata[i][j] - (i == j ? 1.0 : 0.0)));
  return worst;
}

// ---------------------------------------------------------------------------
// OrthogonalTransform3

OrthogonalTransform3 OrthogonalTransform3::from_matrix(const Mat3& m, double tol) {
  for (const auto& row : m)
    for (double x : row)
      if (!std::isfinite(x)) throw ValidationError("transform has non-finite entries");
  const double defect = orthogonality_defect(m);
  if (defect > tol) {
    std::ostringstream msg;
    msg << "matrix is not orthogonal: max |m^T m - I| = " << defect << " exceeds " << tol;
    throw ValidationError(msg.str());
  }
  const double det = determinant(m);
  const int sign = det > 0.0 ? 1 : -1;
  if (std::abs(det - sign) > tol) {
    std::ostringstream msg;
    msg << "matrix determinant " << det << " is not +-1 within " << tol;
    throw ValidationError(msg.str());
  }
  return {m, sign};
}

OrthogonalTransform3 OrthogonalTransform3::identity() {
  return {Mat3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, 1};
}

Vec3 OrthogonalTransform3::apply(const Vec3& x) const {
  Vec3 y{};
  for (int i = 0; i < 3; ++i) y[i] = dot(m_[i], x);
  return y;
}

OrthogonalTransform3 OrthogonalTransform3::inverse() const { return {transpose(m_), det_sign_}; }

OrthogonalTransform3 operator*(const OrthogonalTransform3& a, const OrthogonalTransform3& b) {
  return {multiply(a.m_, b.m_), a.det_sign_ * b.det_sign_};
}

// ---------------------------------------------------------------------------
// expand / compress

FullTensor3 expand(const SymTraceless3& s) {
  // Value of the entry whose sorted index triple is (i <= j <= k).
  const auto sorted_entry = [&s](int i, int j, int k) -> double {
    switch (9 * i + 3 * j + k) {
      case 0: return s.d111;                   // 111
      case 1: return s.d112;                   // 112
      case 2: return s.d113;                   // 113
      case 4: return s.d122;                   // 122
      case 5: return s.d123;                   // 123
      case 8: return -s.d111 - s.d122;         // 133
      case 13: return s.d222;                  // 222
      case 14: return s.d223;                  // 223
      case 17: return -s.d112 - s.d222;        // 233
      case 26: return -s.d113 - s.d223;        // 333
      default: return 0.0;                     // unreachable for sorted triples
    }
  };
  FullTensor3 f;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        std::array<int, 3> idx{i, j, k};
        std::sort(idx.begin(), idx.end());
        f(i, j, k) = sorted_entry(idx[0], idx[1], idx[2]);
      }
  return f;
}

SymTraceless3 compress(const FullTensor3& f, double tol) {
  if (!(tol > 0.0)) throw ValidationError("compress tolerance must be positive");
  for (double x : f.entries())
    if (!std::isfinite(x)) throw ValidationError("tensor has non-finite entries");
  const double sym = f.symmetry_violation();
  const double tr = f.trace_violation();
  if (sym > tol || tr > tol) {
    std::ostringstream msg;
    if (sym >= tr)
      msg << "tensor is not symmetric: worst violation " << sym << " exceeds " << tol;
    else
      msg << "tensor is not traceless: worst trace " << tr << " exceeds " << tol;
    throw ValidationError(msg.str());
  }
  return {f(0, 0, 0), f(0, 0, 1), f(0, 0, 2), f(0, 1, 1), f(0, 1, 2), f(1, 1, 1), f(1, 1, 2)};
}

// ---------------------------------------------------------------------------
// group action and cubic form

FullTensor3 act(const OrthogonalTransform3& g, const FullTensor3& f) {
  const Mat3& m = g.matrix();
  // Contract one slot at a time: 3 * 81 multiplies instead of 729.
  FullTensor3 a, b, c;
  for (int p = 0; p < 3; ++p)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i) s += m[p][i] * f(i, j, k);
        a(p, j, k) = s;
      }
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int k = 0; k < 3; ++k) {
        double s = 0.0;
        for (int j = 0; j < 3; ++j) s += m[q][j] * a(p, j, k);
        b(p, q, k) = s;
      }
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        double s = 0.0;
        for (int k = 0; k < 3; ++k) s += m[r][k] * b(p, q, k);
        c(p, q, r) = s;
      }
  return c;
}

SymTraceless3 act(const OrthogonalTransform3& g, const SymTraceless3& s) {
  return compress(act(g, expand(s)));
}

double cubic_form(const FullTensor3& f, const Vec3& x) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += f(i, j, k) * x[i] * x[j] * x[k];
  return s;
}

Vec3 cubic_gradient(const FullTensor3& f, const Vec3& x) {
  Vec3 g{};
  for (int i = 0; i < 3; ++i) {
    double s = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) s += f(i, j, k) * x[j] * x[k];
    g[i] = 3.0 * s;
  }
  return g;
}

Mat3 cubic_hessian(const FullTensor3& f, const Vec3& x) {
  Mat3 h{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      double s = 0.0;
      for (int k = 0; k < 3; ++k) s += f(i, j, k) * x[k];
      h[i][j] = 6.0 * s;
    }
  return h;
}

// ---------------------------------------------------------------------------
// sampling

SymTraceless3 random_tensor(std::uint64_t seed, double scale) {
  if (!(scale >= 0.0) || !std::isfinite(scale))
    throw ValidationError("random_tensor scale must be finite and non-negative");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<double, SymTraceless3::kSize> c{};
  for (double& x : c) x = scale * normal(rng);
  return SymTraceless3::from_array(c);
}

OrthogonalTransform3 random_orthogonal(std::uint64_t seed, bool proper) {
  // A normalized 4-d Gaussian is uniform on S^3, hence Haar on SO(3).
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  double w, x, y, z, n;
  do {
    w = normal(rng);
    x = normal(rng);
    y = normal(rng);
    z = normal(rng);
    n = std::sqrt(w * w + x * x + y * y + z * z);
  } while (n < 1e-8);
  w /= n;
  x /= n;
  y /= n;
  z /= n;
  Mat3 r{{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
          {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
          {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
  if (!proper)
    for (double& e : r[2]) e = -e;  // diag(1, 1, -1) * r
  return OrthogonalTransform3::from_matrix(r);
}

long long st_dimension(int order, int dim) {
  if (order <= 1 || dim <= 1) throw ValidationError("st_dimension requires order > 1 and dim > 1");
  const auto binom = [](long long n, long long k) -> long long {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
  };
  return binom(dim + order - 1, dim - 1) - binom(dim + order - 3, dim - 1);
}

}  // namespace triso
