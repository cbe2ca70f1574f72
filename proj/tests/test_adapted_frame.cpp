#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cvc/adapted_frame.hpp"
#include "cvc/error.hpp"
#include "cvc/families.hpp"
#include "test_util.hpp"

namespace {

using namespace cvc;
using cvc::testing::random_rotation;
constexpr double kPi = std::numbers::pi;

ChristoffelTable random_table(std::mt19937_64& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng), n(rng), n(rng), n(rng), n(rng), n(rng)};
}

double table_distance(const ChristoffelTable& x, const ChristoffelTable& y) {
  return std::max({std::abs(x.a11 - y.a11), std::abs(x.a12 - y.a12), std::abs(x.a21 - y.a21),
                   std::abs(x.a22 - y.a22), std::abs(x.f - y.f), std::abs(x.g - y.g),
                   std::abs(x.c - y.c)});
}

// Connection coefficients in the frame u_a = sum_i r(a, i) e_i for a constant
// orthogonal r: the tensor transformation law.
ConnectionCoefficients transform(const ConnectionCoefficients& conn, const Mat3& r) {
  ConnectionCoefficients out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double s = 0.0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 3; ++k) s += r(a, i) * r(b, j) * r(c, k) * conn.gamma[i][j][k];
        out.gamma[a][b][c] = s;
      }
  return out;
}

// <R(X,Y)Z, W> straight from the definition, using that nabla of constant
// coefficient fields again has constant coefficients.
double riemann_direct(const ConnectionCoefficients& conn, int i, int j, int k, int l) {
  const Vec3 x = Vec3::Unit(i), y = Vec3::Unit(j), z = Vec3::Unit(k);
  const Vec3 bracket = conn.covariant(x, y) - conn.covariant(y, x);
  const Vec3 r = conn.covariant(x, conn.covariant(y, z)) - conn.covariant(y, conn.covariant(x, z)) -
                 conn.covariant(bracket, z);
  return r(l);
}

double norm(const std::array<double, 9>& r) {
  double s = 0.0;
  for (double v : r) s += v * v;
  return std::sqrt(s);
}

TEST(AdaptedFrame, DecomposeExamples) {
  const ADecomposition d = decompose(1, 2, 3, 4);
  EXPECT_DOUBLE_EQ(d.sigma, -1.5);
  EXPECT_DOUBLE_EQ(d.tau, 2.5);
  EXPECT_DOUBLE_EQ(d.a, 2.5);
  EXPECT_DOUBLE_EQ(d.b, -0.5);
  EXPECT_DOUBLE_EQ(d.tr, 5.0);
  EXPECT_DOUBLE_EQ(d.det, -2.0);
  EXPECT_DOUBLE_EQ(d.det_A0, -(1.5 * 1.5 + 2.5 * 2.5));

  const ADecomposition m = decompose(0, 2, 0.5, 0);
  EXPECT_DOUBLE_EQ(m.sigma, 0.0);
  EXPECT_DOUBLE_EQ(m.tau, 1.25);
  EXPECT_DOUBLE_EQ(m.a, 0.0);
  EXPECT_DOUBLE_EQ(m.b, 0.75);
  EXPECT_DOUBLE_EQ(m.det, -1.0);

  const ADecomposition id = decompose(1, 0, 0, 1);
  EXPECT_EQ(id.sigma, 0.0);
  EXPECT_EQ(id.tau, 0.0);
  EXPECT_EQ(id.b, 0.0);
  EXPECT_EQ(id.a, 1.0);
}

TEST(AdaptedFrame, DecomposeReconstructs) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const ADecomposition d = decompose(t);
    EXPECT_NEAR(d.sigma + d.a, t.a11, 1e-15);
    EXPECT_NEAR(d.tau + d.b, t.a12, 1e-15);
    EXPECT_NEAR(d.tau - d.b, t.a21, 1e-15);
    EXPECT_NEAR(d.a - d.sigma, t.a22, 1e-15);
    EXPECT_NEAR(d.det, d.a * d.a + d.det_A0 + d.b * d.b, 1e-12);
  }
}

TEST(AdaptedFrame, RotationMatchesTensorLaw) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> angle(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const double th = angle(rng);
    Mat3 r;
    r << std::cos(th), std::sin(th), 0, -std::sin(th), std::cos(th), 0, 0, 0, 1;
    const ConnectionCoefficients rotated = transform(connection_from_table(t), r);
    EXPECT_LT(adapted_mismatch(rotated), 1e-12);
    EXPECT_LT(table_distance(table_from_connection(rotated), rotate_frame(t, th)), 1e-12);
  }
}

TEST(AdaptedFrame, FlipMatchesTensorLaw) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const ConnectionCoefficients flipped =
        transform(connection_from_table(t), Vec3(1, 1, -1).asDiagonal());
    EXPECT_LT(adapted_mismatch(flipped), 1e-14);
    EXPECT_LT(table_distance(table_from_connection(flipped), flip_e3(t)), 1e-14);
  }
}

TEST(AdaptedFrame, RotationExamples) {
  std::mt19937_64 rng(4);
  const ChristoffelTable t = random_table(rng);
  EXPECT_EQ(table_distance(rotate_frame(t, 0.0), t), 0.0);

  // sigma = 1, b = 0: A = diag(1, -1) turns into the symmetric off-diagonal
  // pattern under a quarter-turn of the frame.
  ChristoffelTable s;
  s.a11 = 1.0;
  s.a22 = -1.0;
  const ChristoffelTable q = rotate_frame(s, kPi / 4);
  EXPECT_NEAR(q.a11, 0.0, 1e-15);
  EXPECT_NEAR(q.a22, 0.0, 1e-15);
  EXPECT_NEAR(q.a12, -1.0, 1e-15);
  EXPECT_NEAR(q.a21, -1.0, 1e-15);
}

TEST(AdaptedFrame, RotationInvariants) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0.0, 2 * kPi);
  for (int trial = 0; trial < 100; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const ChristoffelTable r = rotate_frame(t, angle(rng));
    const ADecomposition d0 = decompose(t), d1 = decompose(r);
    EXPECT_NEAR(d0.tr, d1.tr, 1e-12);
    EXPECT_NEAR(d0.det, d1.det, 1e-12);
    EXPECT_NEAR(d0.a, d1.a, 1e-12);
    EXPECT_NEAR(d0.b, d1.b, 1e-12);
    EXPECT_NEAR(d0.det_A0, d1.det_A0, 1e-12);
    EXPECT_NEAR(t.f * t.f + t.g * t.g, r.f * r.f + r.g * r.g, 1e-12);
    EXPECT_EQ(t.c, r.c);
  }
}

TEST(AdaptedFrame, CanonicalAngleExamples) {
  EXPECT_DOUBLE_EQ(canonical_frame_angle(decompose(2, 0, 0, 0)), 0.0);
  EXPECT_NEAR(canonical_frame_angle(decompose(-1, 0, 0, 1)), kPi / 2, 1e-15);
  EXPECT_NEAR(canonical_frame_angle(decompose(0, 1, 1, 0)), kPi / 4, 1e-15);
}

TEST(AdaptedFrame, CanonicalAngleDiagonalises) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const ADecomposition d = decompose(t);
    const double th = canonical_frame_angle(d);
    EXPECT_GE(th, 0.0);
    EXPECT_LT(th, kPi);
    EXPECT_NEAR(d.tau * std::cos(2 * th) - d.sigma * std::sin(2 * th), 0.0, 1e-12);
    EXPECT_GT(d.sigma * std::cos(2 * th) + d.tau * std::sin(2 * th), 0.0);
    const ADecomposition r = decompose(rotate_frame(t, th));
    const ADecomposition rp = decompose(rotate_frame(t, th + kPi));
    EXPECT_NEAR(r.tau, 0.0, 1e-12);
    EXPECT_GT(r.sigma, 0.0);
    EXPECT_NEAR(r.sigma, rp.sigma, 1e-12);
    EXPECT_NEAR(r.tau, rp.tau, 1e-12);
  }
}

TEST(AdaptedFrame, CanonicalAngleRejectsDegenerateA0) {
  try {
    canonical_frame_angle(decompose(0.5, 1.0, -1.0, 0.5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateA0);
  }
}

TEST(AdaptedFrame, HomogeneousExamples) {
  ChristoffelTable t2;
  t2.a12 = 1.0;
  t2.a21 = -1.0;
  t2.c = 1.5;
  for (double r : verify_homogeneous(t2, 1.0, -4.0)) EXPECT_EQ(r, 0.0);

  ChristoffelTable sol;
  sol.f = 1.0;
  sol.g = 2.0;
  for (double r : verify_homogeneous(sol, 0.0, -5.0)) EXPECT_EQ(r, 0.0);

  ChristoffelTable bumped = t2;
  bumped.a12 += 0.1;
  bumped.a21 -= 0.1;
  const auto res = verify_homogeneous(bumped, 1.0, -4.0);
  EXPECT_GT(std::abs(res[1]), 0.1);
  EXPECT_EQ(kHomogeneousEquationNames[1], "R1331");
}

TEST(AdaptedFrame, HomogeneousResidualsMatchCurvature) {
  // residual[0] = lambda - R1221, the others are R_ijkl minus its target.
  struct Slot {
    int i, j, k, l;
    bool is_eps;
  };
  const Slot slots[] = {{0, 2, 2, 0, true}, {1, 2, 2, 1, true}, {0, 1, 0, 2, false},
                        {0, 1, 1, 2, false}, {0, 2, 0, 1, false}, {1, 2, 0, 1, false},
                        {0, 2, 1, 2, false}, {1, 2, 0, 2, false}};
  std::mt19937_64 rng(7);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const double eps = n(rng), lambda = n(rng);
    const ConnectionCoefficients conn = connection_from_table(t);
    const auto res = verify_homogeneous(t, eps, lambda);
    EXPECT_NEAR(res[0], lambda - riemann_direct(conn, 0, 1, 1, 0), 1e-12);
    for (int s = 0; s < 8; ++s) {
      const Slot& sl = slots[s];
      const double target = sl.is_eps ? eps : 0.0;
      EXPECT_NEAR(res[s + 1], riemann_direct(conn, sl.i, sl.j, sl.k, sl.l) - target, 1e-12)
          << kHomogeneousEquationNames[s + 1];
    }
  }
}

TEST(AdaptedFrame, ResidualNormIsRotationInvariant) {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> n(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const double eps = n(rng), lambda = n(rng), th = n(rng);
    EXPECT_NEAR(norm(verify_homogeneous(t, eps, lambda)),
                norm(verify_homogeneous(rotate_frame(t, th), eps, lambda)), 1e-11);
  }
}

TEST(AdaptedFrame, TableConnectionRoundTrip) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const ChristoffelTable t = random_table(rng);
    const ConnectionCoefficients conn = connection_from_table(t);
    EXPECT_EQ(table_distance(table_from_connection(conn), t), 0.0);
    EXPECT_EQ(adapted_mismatch(conn), 0.0);
  }
}

TEST(AdaptedFrame, FrameAlongRicciDirection) {
  std::mt19937_64 rng(10);
  for (const FamilySpec& spec : {FamilySpec::minus1(2.5), FamilySpec::type2(0.4),
                                 FamilySpec::nonunimodular(0.6, -0.3)}) {
    const FamilyModel m = build(spec);
    const ADecomposition d0 = decompose(*m.table);
    for (int trial = 0; trial < 10; ++trial) {
      const Mat3 q = random_rotation(rng);
      const MetricLieAlgebra skewed = change_basis(*m.algebra, q);
      const AdaptedFrame fr = adapted_frame(skewed, q.transpose() * Vec3::UnitZ());
      EXPECT_LT(fr.mismatch, 1e-12) << m.name;
      EXPECT_NEAR(fr.basis.determinant(), 1.0, 1e-12);
      const ADecomposition d = decompose(fr.table);
      EXPECT_NEAR(d.tr, d0.tr, 1e-12);
      EXPECT_NEAR(d.det, d0.det, 1e-12);
      EXPECT_NEAR(d.b, d0.b, 1e-12);
      EXPECT_NEAR(d.det_A0, d0.det_A0, 1e-12);
      EXPECT_NEAR(fr.table.c, m.table->c, 1e-12);
      EXPECT_NEAR(std::hypot(fr.table.f, fr.table.g), std::hypot(m.table->f, m.table->g), 1e-12);
    }
  }
  try {
    adapted_frame(build(FamilySpec::type2(1.0)).algebra.value(), Vec3(1, 1, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotUnit);
  }
}

}  // namespace
