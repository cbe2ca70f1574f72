#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "cvc/christoffel_table.hpp"
#include "cvc/connection_curvature.hpp"
#include "cvc/cvc_analysis.hpp"
#include "cvc/lie_metric.hpp"

namespace cvc {

enum class FamilyVariant {
  CVC1_TYPE_I,
  CVC1_TYPE_II,
  CVC1_NONUNIMODULAR,
  CVC_MINUS1,
  CVC0_PRODUCT,
  CVC0_SOLVABLE,
  SPACE_FORM,
};

/// CLI spelling, e.g. "cvc1-type2".
std::string_view to_string(FamilyVariant v);
std::optional<FamilyVariant> family_variant_from_string(std::string_view name);

/// Parameters of one homogeneous model. Only the fields used by the variant
/// are read: mu (TYPE_I, MINUS1), c (TYPE_II), f and g (NONUNIMODULAR,
/// SOLVABLE), kappa (PRODUCT), epsilon (SPACE_FORM).
struct FamilySpec {
  FamilyVariant variant = FamilyVariant::SPACE_FORM;
  double mu = 1.0;
  double c = 0.0;
  double f = 0.0;
  double g = 0.0;
  double kappa = 1.0;
  double epsilon = 0.0;

  static FamilySpec type1(double mu);
  static FamilySpec type2(double c);
  static FamilySpec nonunimodular(double f, double g);
  static FamilySpec minus1(double mu);
  static FamilySpec product(double kappa);
  static FamilySpec solvable(double f, double g);
  static FamilySpec space_form(double epsilon);
};

struct FamilyModel {
  FamilySpec spec;
  std::string name;
  /// Adapted-frame table and its Lie algebra; absent for the product S^2 x R
  /// and H^2 x R, which are not represented as Lie groups here.
  std::optional<ChristoffelTable> table;
  std::optional<MetricLieAlgebra> algebra;
  /// Curvature computed from the algebra (or from the triple for products).
  CurvatureData curvature;

  double expected_epsilon = 0.0;
  double expected_lambda = 0.0;
  Extremality expected_extremality = Extremality::BOTH;
  std::optional<GroupLabel> expected_group;
  std::pair<double, double> expected_sec_range{0.0, 0.0};
  bool no_finite_volume_quotient = false;
};

/// Throws PARAMETER_OUT_OF_RANGE for parameters outside the variant's range.
FamilyModel build(const FamilySpec& spec);

/// mu = sqrt((1 - alpha) / (1 + alpha)) for alpha in (0, 1).
double type1_mu_from_alpha(double alpha);

struct IsometryInvariant {
  double plane_curvature = 0.0;        // lambda of the plane orthogonal to e3
  std::optional<double> a0_norm_sq;    // sigma^2 + tau^2 in an adapted frame
};

/// Throws ISOTROPIC_MODEL when every plane has the same curvature.
IsometryInvariant isometry_invariant(const FamilyModel& model);

}  // namespace cvc
