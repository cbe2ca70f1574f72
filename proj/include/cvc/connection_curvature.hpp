#pragma once

#include "cvc/lie_metric.hpp"
#include "cvc/tensor.hpp"

namespace cvc {

/// gamma[i][j][k] is the e_k coordinate of nabla_{e_i} e_j in an orthonormal
/// left-invariant frame.
struct ConnectionCoefficients {
  Tensor3 gamma{};

  /// nabla_X Y for constant-coefficient fields X, Y.
  Vec3 covariant(const Vec3& x, const Vec3& y) const;
};

struct ConnectionResiduals {
  double metric_compatibility = 0.0;  // max |G_ijk + G_ikj|
  double torsion = 0.0;               // max |G_ij. - G_ji. - C_ij.|
};

/// Koszul formula for left-invariant metrics:
/// 2<nabla_X Y, Z> = <[X,Y],Z> - <[Y,Z],X> + <[Z,X],Y>.
/// Throws NOT_ORTHONORMAL unless gram is the identity.
ConnectionCoefficients levi_civita(const MetricLieAlgebra& mla, double tol = kStructureTol);

ConnectionResiduals connection_residuals(const ConnectionCoefficients& conn,
                                         const MetricLieAlgebra& mla);

/// Curvature at a point of a 3-manifold, in an orthonormal frame.
///
/// riemann[i][j][k][l] = <R(e_i,e_j)e_k, e_l> with
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z, so that
/// sec(X ^ Y) = <R(X,Y)Y, X>.
///
/// diag_frame columns are orthonormal Ricci eigenvectors, positively
/// oriented. Eigenvalues ascend, except that the one farthest from the other
/// two is moved to the last slot. lambda_triple = (l23, l13, l12) are the
/// sectional curvatures of the planes of diag_frame missing v1, v2, v3.
struct CurvatureData {
  Tensor4 riemann{};
  Mat3 ricci = Mat3::Zero();
  double scalar = 0.0;
  Mat3 diag_frame = Mat3::Identity();
  Vec3 ricci_eigenvalues = Vec3::Zero();
  Vec3 lambda_triple = Vec3::Zero();
  /// Smallest gap between Ricci eigenvalues; near zero the eigenframe is only
  /// defined up to rotation.
  double eigen_gap = 0.0;
};

struct CurvatureResiduals {
  double antisymmetry = 0.0;    // R_ijkl + R_jikl, R_ijkl + R_ijlk
  double pair_symmetry = 0.0;   // R_ijkl - R_klij
  double bianchi = 0.0;         // R_ijkl + R_jkil + R_kijl
  double scalar_identity = 0.0; // S - 2 (l12 + l13 + l23)
  double ricci_spectrum = 0.0;  // Ricci eigenvalues vs pair sums of the triple
};

CurvatureData riemann_tensor(const ConnectionCoefficients& conn, const MetricLieAlgebra& mla);

/// Convenience: orthonormal algebra -> curvature.
CurvatureData curvature_of(const MetricLieAlgebra& orthonormal_mla);

/// Curvature of a point whose Ricci tensor is diagonal in the standard frame
/// with the given sectional triple (l23, l13, l12); all mixed components vanish.
CurvatureData curvature_from_triple(const Vec3& lambda_triple);

CurvatureResiduals curvature_residuals(const CurvatureData& cd);

/// Fills ricci, scalar, eigen-decomposition and the triple from riemann.
void finish_curvature(CurvatureData& cd);

/// <R(X,Y)Z, W> for arbitrary frame vectors.
double riemann_form(const CurvatureData& cd, const Vec3& x, const Vec3& y, const Vec3& z,
                    const Vec3& w);

struct SectionalValue {
  double direct = 0.0;        // <R(X,Y)Y, X>
  double via_ricci = 0.0;     // S/2 - Ric(Z,Z), Z = X x Y
};

/// Sectional curvature of span{X, Y} for orthonormal X, Y (frame coordinates).
/// Throws DEGENERATE_PLANE when X and Y are nearly parallel and NOT_UNIT when
/// they are not orthonormal within tol.
SectionalValue sectional(const CurvatureData& cd, const Vec3& x, const Vec3& y,
                         double tol = 1e-9);

/// sec of the plane with unit normal Z, with Z given in diag_frame coordinates:
/// c1^2 l23 + c2^2 l13 + c3^2 l12. Throws NOT_UNIT.
double sec_quadratic(const Vec3& lambda_triple, const Vec3& z, double tol = 1e-9);

}  // namespace cvc
