#include <gtest/gtest.h>

#include <cmath>

#include "triso/orbit_oracle.hpp"

namespace triso {
namespace {

double tensor_norm(const SymTraceless3& s) { return expand(s).frobenius_norm(); }

double alignment_error(const SymTraceless3& a, const SymTraceless3& b, const AlignmentResult& r) {
  return frobenius_distance(expand(act(r.best_transform, a)), expand(b));
}

TEST(Alignment, SelfIsIdentity) {
  const SymTraceless3 a = random_tensor(1);
  const AlignmentResult r = best_alignment(a, a, Group::kO3);
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_TRUE(r.best_transform.proper());
  EXPECT_LE(orthogonality_defect(r.best_transform.matrix()), 1e-12);
  EXPECT_NEAR(r.residual, alignment_error(a, a, r), 1e-12);
}

TEST(Alignment, PlantedProperRotation) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SymTraceless3 a = random_tensor(seed + 10);
    const SymTraceless3 b = act(random_orthogonal(seed + 20, true), a);
    for (Group g : {Group::kO3, Group::kSO3}) {
      const AlignmentResult r = best_alignment(a, b, g);
      EXPECT_LE(r.residual, 1e-8) << seed;
      EXPECT_EQ(r.group, g);
      EXPECT_GE(r.starts_used, 1);
      EXPECT_NEAR(r.residual, alignment_error(a, b, r), 1e-10);
    }
  }
}

TEST(Alignment, PlantedReflectionNeedsO3) {
  const SymTraceless3 a = random_tensor(12);
  const SymTraceless3 b = act(random_orthogonal(3, false), a);
  const AlignmentResult r = best_alignment(a, b, Group::kO3);
  EXPECT_LE(r.residual, 1e-8);
  EXPECT_FALSE(r.best_transform.proper());
  // A generic tensor has no improper symmetry, so rotations alone cannot match.
  EXPECT_GT(best_alignment(a, b, Group::kSO3).residual, 1e-3 * tensor_norm(a));
}

TEST(Alignment, DoubledTensorIsFarAway) {
  const SymTraceless3 a = random_tensor(4);
  const SymTraceless3 b = a.scaled(2.0);
  const AlignmentResult r = best_alignment(a, b, Group::kO3);
  // Orthogonal maps preserve the norm, so the residual is at least ||b|| - ||a||.
  EXPECT_GE(r.residual, tensor_norm(a) * (1 - 1e-9));
  EXPECT_NEAR(smith_bao(b).i2, 4 * smith_bao(a).i2, 1e-12 * smith_bao(b).i2);
  EXPECT_EQ(same_orbit(a, b), Verdict::kDifferent);
}

TEST(SameOrbit, RotatedCopies) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SymTraceless3 a = random_tensor(seed + 400);
    EXPECT_EQ(same_orbit(a, act(random_orthogonal(seed + 401, seed % 2 == 1), a)), Verdict::kSame);
  }
}

TEST(SameOrbit, SqrtPairDiffersInI4) {
  const SymTraceless3 a{.d111 = std::sqrt(3.0)}, b{.d112 = std::sqrt(2.0)};
  EXPECT_EQ(same_orbit(a, b), Verdict::kDifferent);
  EXPECT_EQ(same_orbit(SymTraceless3{}, SymTraceless3{}), Verdict::kSame);
}

TEST(SameOrbit, BorderlineBand) {
  const SymTraceless3 a = random_tensor(6);
  const double i2 = smith_bao(a).i2;
  // Scaling by 1 + e changes I2 by about 2e relative to itself.
  EXPECT_EQ(same_orbit(a, a.scaled(1 + 1e-10)), Verdict::kSame);
  EXPECT_EQ(same_orbit(a, a.scaled(1 + 1.5e-8)), Verdict::kBorderline);
  EXPECT_EQ(same_orbit(a, a.scaled(1 + 1e-6)), Verdict::kDifferent);
  EXPECT_GT(i2, 0.0);
}

TEST(SameOrbit, ScaleInvariantThreshold) {
  const SymTraceless3 a = random_tensor(8);
  const SymTraceless3 b = act(random_orthogonal(9, true), a);
  for (double t : {1e-3, 1.0, 1e3}) EXPECT_EQ(same_orbit(a.scaled(t), b.scaled(t)), Verdict::kSame);
}

TEST(SameOrbit, I10SignSeparatesMirrorPair) {
  const SymTraceless3 a{.d111 = 1, .d112 = 1}, b{.d111 = 1, .d123 = 1};
  const InvariantTuple ia = smith_bao(a), ib = smith_bao(b);
  EXPECT_NEAR(ia.i10, 64, 1e-12);
  EXPECT_NEAR(ib.i10, -64, 1e-12);
  EXPECT_EQ(same_orbit(a, b), Verdict::kDifferent);
  const AlignmentResult r = best_alignment(a, b, Group::kO3);
  EXPECT_GT(r.residual, 1e-3);
}

TEST(InvariantDistance, Basics) {
  EXPECT_EQ(invariant_distance({}, {}), 0.0);
  EXPECT_DOUBLE_EQ(invariant_distance({4, 16, 0, 0}, {4, 16, 0, 0}), 0.0);
  EXPECT_DOUBLE_EQ(invariant_distance({4, 16, 0, 0}, {2, 16, 0, 0}), 0.5);
  EXPECT_DOUBLE_EQ(invariant_distance({1, 1, 1, 1}, {1, 1, 1, -1}), 2.0);
}

TEST(Compare, PlantedSuite) {
  int agree = 0, counted = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SymTraceless3 a = random_tensor(seed + 7000);
    const SymTraceless3 b = act(random_orthogonal(seed + 8000, seed % 2 == 0), a);
    const OrbitComparison c = compare_orbits(a, b, kDefaultOrbitTolerance, true);
    ASSERT_TRUE(c.alignment_residual.has_value());
    EXPECT_EQ(c.verdict, Verdict::kSame) << seed;
    EXPECT_LE(*c.alignment_residual, 1e-8) << seed;
    if (c.verdict == Verdict::kBorderline) continue;
    ++counted;
    agree += (c.verdict == Verdict::kSame) == (*c.alignment_residual <= 1e-8);
  }
  EXPECT_EQ(agree, counted);
}

TEST(Compare, RandomSuite) {
  int agree = 0, counted = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const SymTraceless3 a = random_tensor(seed + 9000);
    const SymTraceless3 b = random_tensor(seed + 9500);
    const OrbitComparison c = compare_orbits(a, b, kDefaultOrbitTolerance, true);
    EXPECT_EQ(c.verdict, Verdict::kDifferent) << seed;
    EXPECT_GT(*c.alignment_residual, 1e-3 * tensor_norm(a)) << seed;
    if (c.verdict == Verdict::kBorderline) continue;
    ++counted;
    agree += (c.verdict == Verdict::kSame) == (*c.alignment_residual <= 1e-8);
  }
  EXPECT_EQ(agree, counted);
}

TEST(Compare, WithoutAlignment) {
  const OrbitComparison c = compare_orbits(random_tensor(1), random_tensor(2), 1e-8, false);
  EXPECT_FALSE(c.alignment_residual.has_value());
  EXPECT_EQ(to_string(c.verdict), "different");
  EXPECT_EQ(to_string(Verdict::kSame), "same");
  EXPECT_EQ(to_string(Verdict::kBorderline), "borderline");
}

}  // namespace
}  // namespace triso
