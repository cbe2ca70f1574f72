#include "cvc/adapted_frame.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cvc/error.hpp"

namespace cvc {

ADecomposition decompose(double a11, double a12, double a21, double a22) {
  ADecomposition d;
  d.sigma = 0.5 * (a11 - a22);
  d.tau = 0.5 * (a12 + a21);
  d.a = 0.5 * (a11 + a22);
  d.b = 0.5 * (a12 - a21);
  d.tr = a11 + a22;
  d.det = a11 * a22 - a12 * a21;
  d.det_A0 = -(d.sigma * d.sigma + d.tau * d.tau);
  return d;
}

ADecomposition decompose(const ChristoffelTable& t) {
  return decompose(t.a11, t.a12, t.a21, t.a22);
}

ChristoffelTable rotate_frame(const ChristoffelTable& t, double theta) {
  const double cs = std::cos(theta);
  const double sn = std::sin(theta);
  Eigen::Matrix2d rot;
  rot << cs, sn, -sn, cs;
  Eigen::Matrix2d a;
  a << t.a11, t.a12, t.a21, t.a22;
  const Eigen::Matrix2d ar = rot * a * rot.transpose();

  ChristoffelTable out;
  out.a11 = ar(0, 0);
  out.a12 = ar(0, 1);
  out.a21 = ar(1, 0);
  out.a22 = ar(1, 1);
  out.f = cs * t.f + sn * t.g;
  out.g = -sn * t.f + cs * t.g;
  out.c = t.c;
  return out;
}

ChristoffelTable flip_e3(const ChristoffelTable& t) {
  ChristoffelTable out = t;
  out.a11 = -t.a11;
  out.a12 = -t.a12;
  out.a21 = -t.a21;
  out.a22 = -t.a22;
  out.c = -t.c;
  return out;
}

double canonical_frame_angle(const ADecomposition& dec, double tol) {
  if (dec.sigma * dec.sigma + dec.tau * dec.tau <= tol * tol) {
    throw Error(ErrorCode::DegenerateA0, "A0 vanishes; every rotation is adapted");
  }
  // Rotation by theta turns sigma + i tau into exp(-2 i theta)(sigma + i tau).
  double theta = 0.5 * std::atan2(dec.tau, dec.sigma);
  if (theta < 0.0) theta += std::numbers::pi;
  if (theta >= std::numbers::pi) theta -= std::numbers::pi;
  return theta;
}

std::array<double, 9> verify_homogeneous(const ChristoffelTable& t, double epsilon,
                                         double lambda) {
  const double tr = t.a11 + t.a22;
  const double det = t.a11 * t.a22 - t.a12 * t.a21;
  return {
      t.f * t.f + t.g * t.g + t.c * (t.a12 - t.a21) + det + lambda,
      t.c * (t.a12 + t.a21) - t.a11 * t.a11 - t.a12 * t.a21 - epsilon,
      -t.c * (t.a12 + t.a21) - t.a22 * t.a22 - t.a12 * t.a21 - epsilon,
      t.g * (t.a11 - t.a22) - t.f * (t.a21 + t.a12),
      t.f * (t.a11 - t.a22) + t.g * (t.a12 + t.a21),
      t.g * t.a11 + t.f * (t.c - t.a12),
      -t.f * t.a22 + t.g * (t.c + t.a21),
      t.c * (t.a11 - t.a22) + t.a12 * tr,
      t.c * (t.a11 - t.a22) + t.a21 * tr,
  };
}

ConnectionCoefficients connection_from_table(const ChristoffelTable& t) {
  ConnectionCoefficients conn;
  auto& g = conn.gamma;
  g[0][0] = {0.0, -t.g, -t.a11};
  g[0][1] = {t.g, 0.0, -t.a12};
  g[0][2] = {t.a11, t.a12, 0.0};
  g[1][0] = {0.0, t.f, -t.a21};
  g[1][1] = {-t.f, 0.0, -t.a22};
  g[1][2] = {t.a21, t.a22, 0.0};
  g[2][0] = {0.0, t.c, 0.0};
  g[2][1] = {-t.c, 0.0, 0.0};
  g[2][2] = {0.0, 0.0, 0.0};
  return conn;
}

ChristoffelTable table_from_connection(const ConnectionCoefficients& conn) {
  const auto& g = conn.gamma;
  ChristoffelTable t;
  t.a11 = g[0][2][0];
  t.a12 = g[0][2][1];
  t.a21 = g[1][2][0];
  t.a22 = g[1][2][1];
  t.f = g[1][0][1];
  t.g = g[0][1][0];
  t.c = g[2][0][1];
  return t;
}

double adapted_mismatch(const ConnectionCoefficients& conn) {
  const ConnectionCoefficients back = connection_from_table(table_from_connection(conn));
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        worst = std::max(worst, std::abs(conn.gamma[i][j][k] - back.gamma[i][j][k]));
  return worst;
}

AdaptedFrame adapted_frame(const MetricLieAlgebra& orthonormal_mla, const Vec3& e3) {
  if (std::abs(e3.norm() - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotUnit, "e3 must be a unit vector");
  }
  Eigen::Index least = 0;
  e3.cwiseAbs().minCoeff(&least);
  const Vec3 e1 = Vec3::Unit(least).cross(e3).normalized();
  const Vec3 e2 = e3.cross(e1);

  AdaptedFrame out;
  out.basis << e1, e2, e3;
  MetricLieAlgebra rotated = change_basis(orthonormal_mla, out.basis);
  rotated.gram = Mat3::Identity();
  const ConnectionCoefficients conn = levi_civita(rotated);
  out.table = table_from_connection(conn);
  out.mismatch = adapted_mismatch(conn);
  return out;
}

}  // namespace cvc
