#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "triso/invariants.hpp"
#include "triso/paper_repro.hpp"

namespace triso {
namespace {

void expect_tuple_near(const InvariantTuple& got, const InvariantTuple& want, double rel) {
  const auto g = got.to_array();
  const auto w = want.to_array();
  for (int k = 0; k < 4; ++k)
    EXPECT_LE(relative_error(g[k], w[k]), rel) << kInvariantNames[k] << ": " << g[k] << " vs " << w[k];
}

TEST(VVector, SingleD111HasZeroV) {
  const Vec3 v = v_vector(SymTraceless3{.d111 = std::pow(3.0, 0.25)});
  for (double x : v) EXPECT_NEAR(x, 0.0, 1e-14);
}

TEST(VVector, ZeroTensor) {
  for (double x : v_vector(SymTraceless3{})) EXPECT_EQ(x, 0.0);
}

TEST(VVector, D111D112NormSquared16) {
  const Vec3 v = v_vector(SymTraceless3{.d111 = 1, .d112 = 1});
  EXPECT_NEAR(dot(v, v), 16.0, 1e-12);
}

TEST(VVector, MatchesNaiveContraction) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SymTraceless3 s = random_tensor(seed);
    const auto d = oracle::literal_array(s);
    Vec3 want{};
    for (int p = 0; p < 3; ++p)
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l) want[p] += d[i][j][k] * d[i][j][l] * d[k][l][p];
    const Vec3 got = v_vector(s);
    for (int p = 0; p < 3; ++p) EXPECT_NEAR(got[p], want[p], 1e-12 * std::max(1.0, std::abs(want[p])));
  }
}

TEST(SmithBao, RemarkValues) {
  expect_tuple_near(smith_bao(SymTraceless3{.d111 = std::pow(3.0, 0.25)}),
                    {4 * std::sqrt(3.0), 24, 0, 0}, 1e-12);
  expect_tuple_near(smith_bao(SymTraceless3{.d112 = std::pow(2.0, 0.25)}),
                    {6 * std::sqrt(2.0), 24, 0, 0}, 1e-12);
  expect_tuple_near(smith_bao(SymTraceless3{.d111 = 1, .d112 = 1}), {10, 44, 16, 64}, 1e-12);
  expect_tuple_near(smith_bao(SymTraceless3{.d111 = 1, .d123 = 1}), {10, 44, 16, -64}, 1e-12);
  expect_tuple_near(smith_bao(SymTraceless3{.d111 = std::sqrt(3.0)}), {12, 72, 0, 0}, 1e-12);
  expect_tuple_near(smith_bao(SymTraceless3{.d112 = std::sqrt(2.0)}), {12, 48, 0, 0}, 1e-12);
}

TEST(SmithBao, ZeroTensor) {
  EXPECT_EQ(smith_bao(SymTraceless3{}), (InvariantTuple{0, 0, 0, 0}));
}

TEST(SmithBao, MatchesNaiveSums) {
  for (std::uint64_t seed = 100; seed < 200; ++seed) {
    const SymTraceless3 s = random_tensor(seed, 1.5);
    expect_tuple_near(smith_bao(s), oracle::naive_invariants(s), 1e-12);
  }
}

TEST(SmithBao, FullTensorOverloadAgrees) {
  const SymTraceless3 s = random_tensor(7);
  EXPECT_EQ(smith_bao(s), smith_bao(expand(s)));
}

TEST(SmithBao, I2IsSquaredFrobeniusNorm) {
  const SymTraceless3 s = random_tensor(3);
  const double n = expand(s).frobenius_norm();
  EXPECT_NEAR(smith_bao(s).i2, n * n, 1e-12 * n * n);
}

TEST(SmithBao, RotationInvarianceBothDeterminants) {
  double worst = 0.0;
  for (std::uint64_t n = 0; n < 1000; ++n) {
    const SymTraceless3 s = random_tensor(n);
    const OrthogonalTransform3 g = random_orthogonal(n + 5000, n % 2 == 0);
    worst = std::max(worst, relative_error(smith_bao(act(g, s)), smith_bao(s)));
  }
  EXPECT_LE(worst, 1e-10);
}

TEST(SmithBao, ReflectionKeepsI10Sign) {
  // I10 is an O(3) invariant, so a reflection must not flip it.
  const SymTraceless3 s{.d111 = 1, .d112 = 1};
  const auto r = OrthogonalTransform3::from_matrix({{{1, 0, 0}, {0, 1, 0}, {0, 0, -1}}});
  EXPECT_NEAR(smith_bao(act(r, s)).i10, 64.0, 1e-12);
  const auto minus = OrthogonalTransform3::from_matrix({{{-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}});
  EXPECT_NEAR(smith_bao(act(minus, s)).i10, 64.0, 1e-12);
}

TEST(SmithBao, Homogeneity) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (std::uint64_t n = 0; n < 100; ++n) {
    const SymTraceless3 s = random_tensor(n + 900);
    const double t = scale(rng);
    const InvariantTuple base = smith_bao(s);
    const InvariantTuple want{std::pow(t, 2) * base.i2, std::pow(t, 4) * base.i4,
                              std::pow(t, 6) * base.i6, std::pow(t, 10) * base.i10};
    expect_tuple_near(smith_bao(s.scaled(t)), want, 1e-10);
  }
}

TEST(SmithBao, BoundsOnRandomTensors) {
  const double slack = 1e-9;
  for (std::uint64_t n = 0; n < 10000; ++n) {
    const InvariantTuple t = smith_bao(random_tensor(n * 7919 + 1, 1.0 + (n % 5)));
    EXPECT_GE(t.i2, 0.0);
    EXPECT_GE(t.i6, 0.0);
    EXPECT_GE(t.i4, t.i2 * t.i2 / 3.0 * (1 - slack));
    EXPECT_LE(t.i4, t.i2 * t.i2 * (1 + slack));
    EXPECT_LE(std::abs(t.i10), std::sqrt(t.i2) * std::pow(t.i6, 1.5) * (1 + slack));
  }
}

TEST(SmithBao, I2ZeroOnlyForZeroTensor) {
  EXPECT_GT(smith_bao(SymTraceless3{.d222 = 1e-150}).i2, 0.0);
  EXPECT_EQ(smith_bao(SymTraceless3{}).i2, 0.0);
}

TEST(CanonicalInvariants, UnitD111) {
  const InvariantTuple t = canonical_invariants({1, 0, 0, 0});
  expect_tuple_near(t, {4, 8, 0, 0}, 1e-14);
  expect_tuple_near(t, oracle::naive_invariants(SymTraceless3{.d111 = 1}), 1e-14);
}

TEST(CanonicalInvariants, Origin) {
  EXPECT_EQ(canonical_invariants({0, 0, 0, 0}), (InvariantTuple{0, 0, 0, 0}));
}

TEST(CanonicalInvariants, GapPoint) {
  const double t0 = f_root();
  const CanonicalParams c{1, (-1 + std::sin(t0)) / 2, std::cos(t0) / 2, -2};
  const InvariantTuple t = canonical_invariants(c);
  EXPECT_LE(relative_error(t.i2, 20), 1e-12);
  EXPECT_LE(relative_error(t.i4, 176), 1e-12);
  EXPECT_LE(relative_error(t.i6, 104 - 24 * std::sin(3 * t0)), 1e-10);
  EXPECT_LE(std::abs(t.i10), 1e-9);
}

TEST(CanonicalInvariants, I2ClosedForm) {
  const CanonicalParams c{0.3, -1.1, 0.7, 1.9};
  const double want = 4 * c.d111 * c.d111 + 6 * c.d122 * c.d111 + 6 * c.d122 * c.d122 +
                      6 * c.d123 * c.d123 + 4 * c.d223 * c.d223;
  EXPECT_NEAR(canonical_invariants(c).i2, want, 1e-13);
}

TEST(CanonicalInvariants, AgreeWithContractionPath) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int n = 0; n < 500; ++n) {
    const CanonicalParams c{u(rng), u(rng), u(rng), u(rng)};
    const InvariantTuple poly = canonical_invariants(c);
    expect_tuple_near(poly, smith_bao(c.to_tensor()), 1e-10);
    expect_tuple_near(poly, oracle::naive_invariants(c.to_tensor()), 1e-10);
  }
}

TEST(CanonicalInvariants, PolynomialsAreHomogeneous) {
  const auto& polys = canonical_invariant_polynomials();
  for (int k = 0; k < 4; ++k) {
    EXPECT_EQ(polys[k].degree(), kInvariantDegrees[k]);
    for (const auto& m : polys[k].monomials()) {
      int total = 0;
      for (int e : m.exponents) total += e;
      EXPECT_EQ(total, kInvariantDegrees[k]);
    }
  }
}

TEST(RelativeError, Metric) {
  EXPECT_EQ(relative_error(0.0, 0.0), 0.0);
  EXPECT_DOUBLE_EQ(relative_error(0.0, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(relative_error(100.0, 101.0), 1.0 / 101.0);
  EXPECT_DOUBLE_EQ(relative_error(InvariantTuple{1, 2, 3, 4}, InvariantTuple{1, 2, 3, 6}), 2.0 / 6.0);
}

}  // namespace
}  // namespace triso
