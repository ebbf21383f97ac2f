#include "triso/orbit_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

namespace triso {

namespace {

using Quaternion = std::array<double, 4>;  // (w, x, y, z)

Quaternion normalized(const Quaternion& q) {
  const double n = std::sqrt(q[0] * q[0] + q[1] * q[1] + q[2] * q[2] + q[3] * q[3]);
  return {q[0] / n, q[1] / n, q[2] / n, q[3] / n};
}

Quaternion multiply(const Quaternion& p, const Quaternion& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quaternion from_rotation_vector(const std::array<double, 3>& w) {
  const double angle = std::sqrt(w[0] * w[0] + w[1] * w[1] + w[2] * w[2]);
  if (angle == 0.0) return {1.0, 0.0, 0.0, 0.0};
  const double s = std::sin(0.5 * angle) / angle;
  return {std::cos(0.5 * angle), s * w[0], s * w[1], s * w[2]};
}

Mat3 to_matrix(const Quaternion& q) {
  const auto [w, x, y, z] = q;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

// Derivative of t -> exp(t K_a) . T at t = 0, where K_a generates rotation
// about axis a: each slot in turn is hit by K_a.
FullTensor3 generator_action(int axis, const FullTensor3& t) {
  Mat3 k{};
  const int b = (axis + 1) % 3;
  const int c = (axis + 2) % 3;
  k[c][b] = 1.0;
  k[b][c] = -1.0;
  FullTensor3 out;
  for (int p = 0; p < 3; ++p)
    for (int q = 0; q < 3; ++q)
      for (int r = 0; r < 3; ++r) {
        double s = 0.0;
        for (int m = 0; m < 3; ++m)
          s += k[p][m] * t(m, q, r) + k[q][m] * t(p, m, r) + k[r][m] * t(p, q, m);
        out(p, q, r) = s;
      }
  return out;
}

double squared_distance(const FullTensor3& x, const FullTensor3& y) {
  double s = 0.0;
  for (std::size_t n = 0; n < 27; ++n) {
    const double d = x.entries()[n] - y.entries()[n];
    s += d * d;
  }
  return s;
}

struct Descent {
  Quaternion q;
  double cost;
};

Descent levenberg_marquardt(const FullTensor3& a, const FullTensor3& b, Quaternion q,
                            double stop_cost, int max_iterations) {
  const auto rotated = [&a](const Quaternion& quat) {
    return act(OrthogonalTransform3::from_matrix(to_matrix(quat), 1e-10), a);
  };
  FullTensor3 t = rotated(q);
  double cost = squared_distance(t, b);
  double mu = 1e-3;
  for (int it = 0; it < max_iterations && cost > stop_cost; ++it) {
    std::array<FullTensor3, 3> jac{generator_action(0, t), generator_action(1, t),
                                   generator_action(2, t)};
    double h[3][3]{};
    double g[3]{};
    for (int i = 0; i < 3; ++i) {
      for (std::size_t n = 0; n < 27; ++n)
        g[i] += jac[i].entries()[n] * (t.entries()[n] - b.entries()[n]);
      for (int j = 0; j < 3; ++j)
        for (std::size_t n = 0; n < 27; ++n) h[i][j] += jac[i].entries()[n] * jac[j].entries()[n];
    }
    const double gnorm = std::sqrt(g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
    if (gnorm <= 1e-15 * std::max(1.0, cost)) break;

    bool improved = false;
    for (int attempt = 0; attempt < 30 && !improved; ++attempt) {
      Mat3 m{};
      const double diag = std::max({h[0][0], h[1][1], h[2][2], 1e-300});
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m[i][j] = h[i][j] + (i == j ? mu * diag : 0.0);
      // Solve m * step = -g by Cramer's rule (3x3, symmetric positive definite).
      const double det = triso::determinant(m);
      if (!(std::abs(det) > 0.0)) {
        mu *= 10.0;
        continue;
      }
      std::array<double, 3> step{};
      for (int col = 0; col < 3; ++col) {
        Mat3 mc = m;
        for (int r = 0; r < 3; ++r) mc[r][col] = -g[r];
        step[col] = triso::determinant(mc) / det;
      }
      const Quaternion trial_q = normalized(multiply(from_rotation_vector(step), q));
      const FullTensor3 trial_t = rotated(trial_q);
      const double trial_cost = squared_distance(trial_t, b);
      if (trial_cost < cost) {
        q = trial_q;
        t = trial_t;
        cost = trial_cost;
        mu = std::max(mu / 3.0, 1e-12);
        improved = true;
      } else {
        mu *= 4.0;
      }
    }
    if (!improved) break;
  }
  return {q, cost};
}

}  // namespace

AlignmentResult best_alignment(const SymTraceless3& a, const SymTraceless3& b, Group group,
                               const AlignmentConfig& cfg) {
  if (cfg.starts < 1) throw ValidationError("alignment needs at least one start");
  const FullTensor3 fa = expand(a);
  const FullTensor3 fb = expand(b);
  FullTensor3 fb_neg;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) fb_neg(i, j, k) = -fb(i, j, k);

  const double scale = std::max(1.0, fb.frobenius_norm());
  const double stop_cost = std::pow(cfg.tolerance * scale, 2);

  std::mt19937_64 rng(cfg.seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  AlignmentResult result;
  result.group = group;
  double best_cost = std::numeric_limits<double>::infinity();
  Quaternion best_q{1.0, 0.0, 0.0, 0.0};
  bool best_reflected = false;

  for (int s = 0; s < cfg.starts; ++s) {
    Quaternion q0{1.0, 0.0, 0.0, 0.0};
    if (s > 0) q0 = normalized({normal(rng), normal(rng), normal(rng), normal(rng)});
    ++result.starts_used;
    // (-R).A = -(R.A) for odd order, so the reflected branch aligns A to -B.
    for (const bool reflected : {false, true}) {
      if (reflected && group == Group::kSO3) continue;
      const Descent d =
          levenberg_marquardt(fa, reflected ? fb_neg : fb, q0, stop_cost, cfg.max_iterations);
      if (d.cost < best_cost) {
        best_cost = d.cost;
        best_q = d.q;
        best_reflected = reflected;
      }
    }
    if (best_cost <= stop_cost) break;
  }

  Mat3 m = to_matrix(best_q);
  if (best_reflected)
    for (auto& row : m)
      for (double& e : row) e = -e;
  result.best_transform = OrthogonalTransform3::from_matrix(m, 1e-10);
  result.residual = frobenius_distance(act(result.best_transform, fa), fb);
  return result;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kSame: return "same";
    case Verdict::kDifferent: return "different";
    case Verdict::kBorderline: return "borderline";
  }
  return "borderline";
}

double invariant_distance(const InvariantTuple& a, const InvariantTuple& b) {
  const double scale = std::max(a.i2, b.i2);
  if (scale <= 0.0) return a == b ? 0.0 : std::numeric_limits<double>::infinity();
  const auto x = a.to_array();
  const auto y = b.to_array();
  double worst = 0.0;
  for (std::size_t k = 0; k < 4; ++k)
    worst = std::max(worst, std::abs(x[k] - y[k]) / std::pow(scale, kInvariantDegrees[k] / 2));
  return worst;
}

namespace {

Verdict classify(double distance, double tol) {
  if (distance <= tol) return Verdict::kSame;
  if (distance <= 10.0 * tol) return Verdict::kBorderline;
  return Verdict::kDifferent;
}

}  // namespace

Verdict same_orbit(const SymTraceless3& a, const SymTraceless3& b, double tol) {
  if (!(tol > 0.0)) throw ValidationError("orbit tolerance must be positive");
  return classify(invariant_distance(smith_bao(a), smith_bao(b)), tol);
}

OrbitComparison compare_orbits(const SymTraceless3& a, const SymTraceless3& b, double tol,
                               bool run_alignment, const AlignmentConfig& cfg) {
  if (!(tol > 0.0)) throw ValidationError("orbit tolerance must be positive");
  OrbitComparison out;
  out.invariant_distance = invariant_distance(smith_bao(a), smith_bao(b));
  out.verdict = classify(out.invariant_distance, tol);
  if (run_alignment) out.alignment_residual = best_alignment(a, b, Group::kO3, cfg).residual;
  return out;
}

}  // namespace triso
