#pragma once

#include <optional>
#include <vector>

#include "cvc/families.hpp"

namespace cvc {

/// J and its covariant derivative along the geodesic, both in frame
/// coordinates.
struct JacobiState {
  Vec3 J = Vec3::Zero();
  Vec3 Jprime = Vec3::Zero();
  double t = 0.0;
};

/// Constant-coefficient form of the Jacobi equation along the geodesic
/// t -> exp(t dir) of a left-invariant model:
///   dJ/dt      = Jprime - omega J
///   dJprime/dt = -omega Jprime - curvature_op J
/// where omega X = nabla_dir X and curvature_op X = R(X, dir) dir.
struct JacobiSystem {
  Vec3 dir = Vec3::UnitZ();
  Mat3 omega = Mat3::Zero();
  Mat3 curvature_op = Mat3::Zero();

  /// sec(dir ^ J) for J orthogonal to dir.
  double sectional(const Vec3& J) const;
};

/// Throws UNSUPPORTED_MODEL when the model has no connection table,
/// NOT_UNIT for a non-unit dir and NOT_GEODESIC_DIRECTION when
/// nabla_dir dir != 0.
JacobiSystem jacobi_system(const FamilyModel& model, const Vec3& dir, double tol = 1e-12);

/// RK4 trajectory from init.t to t_end; one state per step.
std::vector<JacobiState> jacobi_integrate(const FamilyModel& model, const Vec3& dir,
                                          const JacobiState& init, double t_end,
                                          double step = 1e-3);

JacobiState jacobi_propagate(const JacobiSystem& sys, const JacobiState& init, double t_end,
                             double step = 1e-3);

struct RankOptions {
  double t_max = 3.0;
  int samples = 200;
  double step = 1e-3;
  double tol = 1e-6;
};

struct RankVerdict {
  bool has_hyperbolic_rank_witness = false;
  /// Initial data of the best candidate; set only when it is a witness.
  std::optional<JacobiState> witness;
  /// Deviations |sec(dir, J) + 1| of the best candidate over the samples
  /// where |J| > 1e-8.
  double max_sec_deviation = 0.0;
  double rms_sec_deviation = 0.0;
  /// Smallest value of sum |(R + 1) J|^2 / sum |J|^2 over candidates.
  double functional_min = 0.0;
};

/// Least-squares search over the four-dimensional space of Jacobi fields
/// orthogonal to the geodesic for one with sec(dir, J) = -1 on [0, t_max].
RankVerdict hyperbolic_rank_test(const FamilyModel& model, const Vec3& dir,
                                 const RankOptions& opt = {});

}  // namespace cvc
