#pragma once

#include <array>
#include <string_view>

#include "cvc/christoffel_table.hpp"
#include "cvc/connection_curvature.hpp"
#include "cvc/lie_metric.hpp"

namespace cvc {

/// Normal form A = A0 + a Id + A_sk of the 2x2 block [[a11, a12], [a21, a22]],
/// with A0 = [[sigma, tau], [tau, -sigma]] and A_sk = [[0, b], [-b, 0]].
struct ADecomposition {
  double sigma = 0.0;
  double tau = 0.0;
  double a = 0.0;
  double b = 0.0;
  double tr = 0.0;
  double det = 0.0;
  double det_A0 = 0.0;  // -(sigma^2 + tau^2)
};

ADecomposition decompose(double a11, double a12, double a21, double a22);
ADecomposition decompose(const ChristoffelTable& t);

/// Table of the frame (cos t e1 + sin t e2, -sin t e1 + cos t e2, e3) for a
/// constant angle t. A is conjugated by the rotation, (f, g) rotate with it
/// and c is unchanged.
ChristoffelTable rotate_frame(const ChristoffelTable& t, double theta);

/// Table of the frame (e1, e2, -e3). This reverses orientation; A and c change
/// sign while f and g are untouched, so (a, b) -> (-a, -b).
ChristoffelTable flip_e3(const ChristoffelTable& t);

/// The unique theta in [0, pi) for which the rotated A0 is diag(s, -s), s > 0.
/// Throws DEGENERATE_A0 when sigma^2 + tau^2 <= tol^2.
double canonical_frame_angle(const ADecomposition& dec, double tol = 1e-12);

inline constexpr std::array<std::string_view, 9> kHomogeneousEquationNames = {
    "R1221", "R1331", "R2332", "R1213", "R1223", "R1312", "R2312", "R1323", "R2313"};

/// Residuals of the curvature equations of a left-invariant adapted frame
/// whose e3-orthogonal plane has curvature lambda and whose planes through e3
/// have curvature epsilon. Zero in every slot iff the table describes such a
/// metric.
std::array<double, 9> verify_homogeneous(const ChristoffelTable& t, double epsilon,
                                         double lambda);

/// Full connection coefficients gamma[i][j][k] carried by the table.
ConnectionCoefficients connection_from_table(const ChristoffelTable& t);

/// Reads a table back from connection coefficients. Entries of gamma that an
/// adapted frame forces to vanish (or to be tied to others) are ignored; use
/// adapted_mismatch() to see how far gamma is from a table.
ChristoffelTable table_from_connection(const ConnectionCoefficients& conn);

/// max |gamma - connection_from_table(table_from_connection(gamma))|.
double adapted_mismatch(const ConnectionCoefficients& conn);

struct AdaptedFrame {
  Mat3 basis = Mat3::Identity();  // columns e1, e2, e3 in the input basis
  ChristoffelTable table;
  double mismatch = 0.0;
};

/// Completes a unit e3 (coordinates in an orthonormal basis of mla) to a
/// positively oriented orthonormal frame and reads off its table.
AdaptedFrame adapted_frame(const MetricLieAlgebra& orthonormal_mla, const Vec3& e3);

}  // namespace cvc
