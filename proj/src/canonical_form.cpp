#include "triso/canonical_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

namespace triso {

namespace {

constexpr double kUnitTolerance = 1e-10;
constexpr double kTieTolerance = 1e-12;
constexpr double kCircleRootTolerance = 1e-12;
constexpr int kCircleScanIntervals = 360;

void require_unit(const Vec3& x, const char* what) {
  if (std::abs(norm(x) - 1.0) > kUnitTolerance) {
    std::ostringstream msg;
    msg << what << ": vector norm " << norm(x) << " is not 1";
    throw ValidationError(msg.str());
  }
}

Vec3 normalized(const Vec3& x) {
  const double n = norm(x);
  return {x[0] / n, x[1] / n, x[2] / n};
}

Vec3 tangential(const Vec3& x, const Vec3& grad) {
  const double lambda = dot(x, grad);
  return {grad[0] - lambda * x[0], grad[1] - lambda * x[1], grad[2] - lambda * x[2]};
}

std::vector<Vec3> fibonacci_lattice(int count) {
  std::vector<Vec3> pts;
  pts.reserve(count);
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (int n = 0; n < count; ++n) {
    const double z = 1.0 - (2.0 * n + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * n;
    pts.push_back({r * std::cos(phi), r * std::sin(phi), z});
  }
  return pts;
}

struct LocalResult {
  Vec3 x;
  double value;
  double residual;
  int iterations;
  bool converged;
};

// Newton step on the sphere, restricted to the tangent plane at x. Returns
// false unless the Riemannian Hessian is negative definite there (a local
// maximum basin).
bool newton_direction(const FullTensor3& f, const Vec3& x, const Vec3& rgrad, double lambda,
                      Vec3& step) {
  const Vec3 seed = std::abs(x[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
  const Vec3 t1 = normalized(tangential(x, seed));
  const Vec3 t2 = cross(x, t1);
  const Mat3 h = cubic_hessian(f, x);
  const auto quad = [&h](const Vec3& p, const Vec3& q) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += p[i] * h[i][j] * q[j];
    return s;
  };
  const double h11 = quad(t1, t1) - lambda;
  const double h12 = quad(t1, t2);
  const double h22 = quad(t2, t2) - lambda;
  const double det = h11 * h22 - h12 * h12;
  if (!(h11 < 0.0 && det > 0.0)) return false;
  const double g1 = dot(t1, rgrad);
  const double g2 = dot(t2, rgrad);
  const double e1 = -(h22 * g1 - h12 * g2) / det;
  const double e2 = -(h11 * g2 - h12 * g1) / det;
  for (int i = 0; i < 3; ++i) step[i] = e1 * t1[i] + e2 * t2[i];
  return true;
}

LocalResult local_ascent(const FullTensor3& f, const Vec3& start, double scale, double tol,
                         int max_iterations) {
  Vec3 x = normalized(start);
  double value = cubic_form(f, x);
  double alpha = 1.0 / (6.0 * scale);
  int it = 0;
  for (;; ++it) {
    const Vec3 grad = cubic_gradient(f, x);
    const double lambda = dot(x, grad);
    const Vec3 rgrad = tangential(x, grad);
    const double residual = norm(rgrad);
    if (residual <= tol) return {x, value, residual, it, true};
    if (it >= max_iterations) return {x, value, residual, it, false};

    // Newton once close to a nondegenerate maximum; accepted only if it
    // reduces the residual without losing more than roundoff in value.
    Vec3 step{};
    if (residual < 1e-3 * scale && newton_direction(f, x, rgrad, lambda, step)) {
      const Vec3 trial = normalized({x[0] + step[0], x[1] + step[1], x[2] + step[2]});
      const double trial_value = cubic_form(f, trial);
      const double trial_residual = norm(tangential(trial, cubic_gradient(f, trial)));
      if (trial_residual < residual && trial_value >= value - 1e-14 * scale) {
        x = trial;
        value = trial_value;
        continue;
      }
    }

    // Projected gradient ascent with Armijo backtracking.
    alpha = std::min(alpha * 2.0, 1.0 / scale);
    bool accepted = false;
    for (int halving = 0; halving < 60; ++halving, alpha *= 0.5) {
      const Vec3 trial =
          normalized({x[0] + alpha * rgrad[0], x[1] + alpha * rgrad[1], x[2] + alpha * rgrad[2]});
      const double trial_value = cubic_form(f, trial);
      if (trial_value >= value + 1e-4 * alpha * residual * residual) {
        x = trial;
        value = trial_value;
        accepted = true;
        break;
      }
    }
    if (!accepted) return {x, value, residual, it, residual <= tol};
  }
}

bool lexicographically_greater(const Vec3& a, const Vec3& b) {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

double stationarity_residual(const SymTraceless3& s, const Vec3& x) {
  require_unit(x, "stationarity_residual");
  return norm(tangential(x, cubic_gradient(expand(s), x)));
}

SphereMaximizer maximize_cubic_on_sphere(const SymTraceless3& s, const SphereConfig& cfg) {
  if (cfg.lattice_starts + cfg.random_starts < 1)
    throw ValidationError("sphere maximizer needs at least one start");
  if (!(cfg.stationarity_tolerance > 0.0))
    throw ValidationError("stationarity tolerance must be positive");
  if (!s.is_finite()) throw ValidationError("tensor has non-finite components");

  SphereMaximizer best;
  if (s.is_zero()) {
    best.starts_converged = cfg.lattice_starts + cfg.random_starts;
    return best;
  }

  const FullTensor3 f = expand(s);
  const double scale = std::max(1.0, f.frobenius_norm());
  const double tol = cfg.stationarity_tolerance * scale;

  std::vector<Vec3> starts = fibonacci_lattice(cfg.lattice_starts);
  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int n = 0; n < cfg.random_starts; ++n) {
    Vec3 x{};
    do {
      x = {normal(rng), normal(rng), normal(rng)};
    } while (norm(x) < 1e-8);
    starts.push_back(x);
  }

  bool have_best = false;
  double failed_residual = std::numeric_limits<double>::infinity();
  for (const Vec3& start : starts) {
    const LocalResult r = local_ascent(f, start, scale, tol, cfg.max_iterations);
    best.total_iterations += r.iterations;
    if (!r.converged) {
      failed_residual = std::min(failed_residual, r.residual);
      continue;
    }
    ++best.starts_converged;
    const bool better = !have_best || r.value > best.value + kTieTolerance * scale;
    const bool tie = have_best && std::abs(r.value - best.value) <= kTieTolerance * scale;
    if (better || (tie && lexicographically_greater(r.x, best.u))) {
      best.u = r.x;
      best.value = r.value;
      best.residual = r.residual;
      have_best = true;
    }
  }
  if (!have_best) {
    std::ostringstream msg;
    msg << "no sphere start reached stationarity tolerance " << tol << "; best residual "
        << failed_residual;
    throw NumericalError(msg.str(), failed_residual);
  }
  return best;
}

OrthogonalTransform3 rotation_to_e1(const Vec3& u_in) {
  require_unit(u_in, "rotation_to_e1");
  Vec3 u = normalized(u_in);

  // Rodrigues' formula is unstable for u near -e1, so first flip by a half
  // turn about e3 in that hemisphere.
  Mat3 pre{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  if (u[0] < 0.0) {
    pre = Mat3{{{-1, 0, 0}, {0, -1, 0}, {0, 0, 1}}};
    u = {-u[0], -u[1], u[2]};
  }
  const Vec3 k = cross(u, Vec3{1, 0, 0});
  const double c = u[0];
  const Mat3 kx{{{0, -k[2], k[1]}, {k[2], 0, -k[0]}, {-k[1], k[0], 0}}};
  const Mat3 kx2 = multiply(kx, kx);
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = (i == j ? 1.0 : 0.0) + kx[i][j] + kx2[i][j] / (1.0 + c);
  return OrthogonalTransform3::from_matrix(multiply(r, pre));
}

double circle_zero_angle(const SymTraceless3& aligned) {
  const FullTensor3 f = expand(aligned);
  const auto h = [&f](double theta) {
    return cubic_form(f, Vec3{0.0, std::cos(theta), std::sin(theta)});
  };
  if (std::abs(h(0.0)) <= kCircleRootTolerance) return 0.0;

  // h(theta + pi) = -h(theta), so a sign change occurs on [0, pi].
  double lo = 0.0;
  double h_lo = h(lo);
  double hi = 0.0;
  double h_hi = h_lo;
  for (int n = 1; n <= kCircleScanIntervals; ++n) {
    hi = std::numbers::pi * n / kCircleScanIntervals;
    h_hi = h(hi);
    if (h_hi == 0.0) return hi < std::numbers::pi ? hi : 0.0;
    if ((h_lo < 0.0) != (h_hi < 0.0)) break;
    lo = hi;
    h_lo = h_hi;
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double h_mid = h(mid);
    if (h_mid == 0.0) return mid;
    if ((h_mid < 0.0) == (h_lo < 0.0)) {
      lo = mid;
      h_lo = h_mid;
    } else {
      hi = mid;
      h_hi = h_mid;
    }
  }
  const double root = std::abs(h_lo) <= std::abs(h_hi) ? lo : hi;
  return root < std::numbers::pi ? root : 0.0;
}

OrthogonalTransform3 rotation_about_e1(double theta) {
  if (theta == 0.0) return OrthogonalTransform3::identity();
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return OrthogonalTransform3::from_matrix(Mat3{{{1, 0, 0}, {0, c, s}, {0, -s, c}}});
}

CanonicalResult canonicalize(const SymTraceless3& s, const SphereConfig& cfg) {
  CanonicalResult result;
  if (s.is_zero()) return result;

  const SphereMaximizer m = maximize_cubic_on_sphere(s, cfg);
  const OrthogonalTransform3 to_e1 = rotation_to_e1(m.u);
  const SymTraceless3 on_e1 = act(to_e1, s);
  const double theta = circle_zero_angle(on_e1);
  const OrthogonalTransform3 about_e1 = rotation_about_e1(theta);

  result.transform = about_e1 * to_e1;
  result.aligned = act(about_e1, on_e1);
  result.params = {result.aligned.d111, result.aligned.d122, result.aligned.d123,
                   result.aligned.d223};
  result.max_value = m.value;
  result.diagnostics = {m.starts_converged, m.total_iterations, m.residual, theta,
                        std::abs(result.aligned.d222)};
  return result;
}

}  // namespace triso
