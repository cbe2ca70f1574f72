#include "cvc/connection_curvature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvc/error.hpp"

namespace cvc {

Vec3 ConnectionCoefficients::covariant(const Vec3& x, const Vec3& y) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double w = x(i) * y(j);
      if (w == 0.0) continue;
      for (int k = 0; k < 3; ++k) out(k) += w * gamma[i][j][k];
    }
  return out;
}

ConnectionCoefficients levi_civita(const MetricLieAlgebra& mla, double tol) {
  const double dev = (mla.gram - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw Error(ErrorCode::NotOrthonormal,
                "levi_civita needs an orthonormal basis; gram deviates by " +
                    std::to_string(dev));
  }
  const auto& c = mla.structure_constants;
  ConnectionCoefficients conn;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        conn.gamma[i][j][k] = 0.5 * (c[i][j][k] - c[j][k][i] + c[k][i][j]);
  return conn;
}

ConnectionResiduals connection_residuals(const ConnectionCoefficients& conn,
                                         const MetricLieAlgebra& mla) {
  ConnectionResiduals r;
  const auto& g = conn.gamma;
  const auto& c = mla.structure_constants;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        r.metric_compatibility = std::max(r.metric_compatibility, std::abs(g[i][j][k] + g[i][k][j]));
        r.torsion = std::max(r.torsion, std::abs(g[i][j][k] - g[j][i][k] - c[i][j][k]));
      }
  return r;
}

CurvatureData riemann_tensor(const ConnectionCoefficients& conn, const MetricLieAlgebra& mla) {
  const auto& g = conn.gamma;
  const auto& c = mla.structure_constants;
  CurvatureData cd;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          // nabla_i (G_jk^m e_m) - nabla_j (G_ik^m e_m) - C_ij^m nabla_m e_k
          double s = 0.0;
          for (int m = 0; m < 3; ++m)
            s += g[j][k][m] * g[i][m][l] - g[i][k][m] * g[j][m][l] - c[i][j][m] * g[m][k][l];
          cd.riemann[i][j][k][l] = s;
        }
  finish_curvature(cd);
  return cd;
}

CurvatureData curvature_of(const MetricLieAlgebra& orthonormal_mla) {
  return riemann_tensor(levi_civita(orthonormal_mla), orthonormal_mla);
}

CurvatureData curvature_from_triple(const Vec3& lambda_triple) {
  CurvatureData cd;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      const double sec = lambda_triple(3 - i - j);
      cd.riemann[i][j][j][i] = sec;
      cd.riemann[i][j][i][j] = -sec;
    }
  finish_curvature(cd);
  return cd;
}

void finish_curvature(CurvatureData& cd) {
  cd.ricci.setZero();
  for (int j = 0; j < 3; ++j)
    for (int k = 0; k < 3; ++k)
      for (int i = 0; i < 3; ++i) cd.ricci(j, k) += cd.riemann[i][j][k][i];
  cd.scalar = cd.ricci.trace();

  Eigen::SelfAdjointEigenSolver<Mat3> es(0.5 * (cd.ricci + cd.ricci.transpose()));
  Vec3 ev = es.eigenvalues();
  Mat3 vecs = es.eigenvectors();
  // The eigenvalue most separated from the other two goes last, so that at a
  // cvc point v3 is the distinguished direction.
  const double gap_low = ev(1) - ev(0);
  const double gap_high = ev(2) - ev(1);
  if (gap_low > gap_high) {
    const Vec3 ev_sorted(ev(1), ev(2), ev(0));
    Mat3 v;
    v << vecs.col(1), vecs.col(2), vecs.col(0);
    ev = ev_sorted;
    vecs = v;
  }
  if (vecs.determinant() < 0) vecs.col(2) = -vecs.col(2);
  cd.ricci_eigenvalues = ev;
  cd.diag_frame = vecs;
  cd.eigen_gap = std::min(gap_low, gap_high);
  const double half_s = 0.5 * cd.scalar;
  cd.lambda_triple = Vec3(half_s - ev(0), half_s - ev(1), half_s - ev(2));
}

double riemann_form(const CurvatureData& cd, const Vec3& x, const Vec3& y, const Vec3& z,
                    const Vec3& w) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double xy = x(i) * y(j);
      if (xy == 0.0) continue;
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) s += xy * z(k) * w(l) * cd.riemann[i][j][k][l];
    }
  return s;
}

CurvatureResiduals curvature_residuals(const CurvatureData& cd) {
  CurvatureResiduals r;
  const auto& R = cd.riemann;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
          r.antisymmetry = std::max({r.antisymmetry, std::abs(R[i][j][k][l] + R[j][i][k][l]),
                                     std::abs(R[i][j][k][l] + R[i][j][l][k])});
          r.pair_symmetry = std::max(r.pair_symmetry, std::abs(R[i][j][k][l] - R[k][l][i][j]));
          r.bianchi = std::max(r.bianchi,
                               std::abs(R[i][j][k][l] + R[j][k][i][l] + R[k][i][j][l]));
        }
  const Vec3& t = cd.lambda_triple;
  r.scalar_identity = std::abs(cd.scalar - 2.0 * t.sum());
  // Ricci eigenvalue for v_i is the sum of the two planes containing v_i.
  const Vec3 expected(t(1) + t(2), t(0) + t(2), t(0) + t(1));
  r.ricci_spectrum = (expected - cd.ricci_eigenvalues).cwiseAbs().maxCoeff();
  // Direct contraction in the eigenframe must reproduce the triple as well.
  for (int m = 0; m < 3; ++m) {
    const Vec3 a = cd.diag_frame.col((m + 1) % 3);
    const Vec3 b = cd.diag_frame.col((m + 2) % 3);
    r.ricci_spectrum = std::max(r.ricci_spectrum, std::abs(riemann_form(cd, a, b, b, a) - t(m)));
  }
  return r;
}

SectionalValue sectional(const CurvatureData& cd, const Vec3& x, const Vec3& y, double tol) {
  const Vec3 z = x.cross(y);
  if (z.norm() < 1e-6) {
    throw Error(ErrorCode::DegeneratePlane, "X and Y are nearly parallel");
  }
  if (std::abs(x.norm() - 1.0) > tol || std::abs(y.norm() - 1.0) > tol ||
      std::abs(x.dot(y)) > tol) {
    throw Error(ErrorCode::NotUnit, "X and Y must be orthonormal");
  }
  SectionalValue out;
  out.direct = riemann_form(cd, x, y, y, x);
  out.via_ricci = 0.5 * cd.scalar - z.dot(cd.ricci * z);
  return out;
}

double sec_quadratic(const Vec3& lambda_triple, const Vec3& z, double tol) {
  if (std::abs(z.squaredNorm() - 1.0) > tol) {
    throw Error(ErrorCode::NotUnit, "plane normal must be a unit vector");
  }
  return z(0) * z(0) * lambda_triple(0) + z(1) * z(1) * lambda_triple(1) +
         z(2) * z(2) * lambda_triple(2);
}

}  // namespace cvc
