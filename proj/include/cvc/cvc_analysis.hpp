#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "cvc/connection_curvature.hpp"

namespace cvc {

enum class Extremality { SEC_AT_MOST, SEC_AT_LEAST, BOTH, NEITHER };

std::string_view to_string(Extremality e);

inline constexpr double kCvcTol = 1e-8;
inline constexpr double kSampledTol = 1e-6;

/// Pointwise constant-vector-curvature verdict.
///
/// lambda and e3_direction are set only for cvc points that are extremal and
/// not isotropic; e3_direction is in the coordinates of the frame the
/// curvature was computed in (not diag_frame coordinates).
struct CvcReport {
  double epsilon = 0.0;
  bool is_cvc = false;
  Extremality extremality = Extremality::NEITHER;
  bool isotropic = false;
  std::optional<double> lambda;
  std::optional<Vec3> e3_direction;
  Vec3 lambda_triple = Vec3::Zero();
  double tol = kCvcTol;
};

/// cvc(eps) holds at a point iff the median of the sectional triple equals
/// eps: the curvatures of planes through a unit v fill the interval between
/// the two eigenvalues of the sec quadratic form restricted to v-perp, and by
/// interlacing every such interval contains eps exactly when the median does.
CvcReport cvc_status(const CurvatureData& cd, double epsilon, double tol = kCvcTol);

Extremality extremality(const CurvatureData& cd, double epsilon, double tol = kCvcTol);

/// Ricci eigenvector with eigenvalue 2 eps, in frame coordinates. Throws
/// ISOTROPIC_POINT when lambda == eps and NOT_CVC_EXTREMAL when the point is
/// not an extremal cvc(eps) point.
Vec3 e3_direction(const CurvatureData& cd, double epsilon, double tol = kCvcTol);

struct BruteforceOptions {
  int n_vectors = 500;
  int n_angles = 256;
  double tol = kSampledTol;
  std::uint64_t seed = 42;
};

/// Samples unit vectors v and sweeps planes through v; true iff for every
/// sample eps lies within [min, max] of the sweep (+/- tol).
bool cvc_bruteforce(const CurvatureData& cd, double epsilon, const BruteforceOptions& opt = {});
bool cvc_bruteforce(const Vec3& lambda_triple, double epsilon, const BruteforceOptions& opt = {});

}  // namespace cvc
