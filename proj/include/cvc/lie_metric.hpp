#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "cvc/christoffel_table.hpp"
#include "cvc/tensor.hpp"

namespace cvc {

/// Three-dimensional Lie algebra with an inner product.
///
/// structure_constants[i][j][k] is the v_k coordinate of [v_i, v_j]; gram holds
/// the inner products <v_i, v_j>. The basis {v1, v2, v3} is taken to be
/// positively oriented.
struct MetricLieAlgebra {
  Tensor3 structure_constants{};
  Mat3 gram = Mat3::Identity();

  /// Builds from nested vectors, rejecting anything not shaped 3x3x3 / 3x3.
  static MetricLieAlgebra from_nested(
      const std::vector<std::vector<std::vector<double>>>& c,
      const std::vector<std::vector<double>>& gram);

  /// Coordinates of [v_i, v_j].
  Vec3 bracket(int i, int j) const;
  /// Bracket of two arbitrary vectors given in basis coordinates.
  Vec3 bracket(const Vec3& x, const Vec3& y) const;
};

struct ValidationReport {
  double antisymmetry = 0.0;   // max |C_ijk + C_jik|
  double jacobi = 0.0;         // max |[[v_i,v_j],v_k] + cyclic|
  double gram_symmetry = 0.0;  // max |G_ij - G_ji|
  double gram_min_eigenvalue = 0.0;
  double tol = 0.0;

  bool antisymmetry_ok() const { return antisymmetry <= tol; }
  bool jacobi_ok() const { return jacobi <= tol; }
  bool positivity_ok() const {
    return gram_symmetry <= tol && gram_min_eigenvalue > tol;
  }
  bool pass() const { return antisymmetry_ok() && jacobi_ok() && positivity_ok(); }
  /// Name of the first failing invariant, or empty when everything passes.
  std::string_view first_failure() const;
};

ValidationReport validate(const MetricLieAlgebra& mla, double tol = kStructureTol);

double jacobi_residual(const Tensor3& c);

/// Upper-triangular P with P^T G P = I (columns are the Gram-Schmidt basis).
/// Throws NOT_POSITIVE_DEFINITE when the Cholesky factorisation fails.
Mat3 orthonormal_basis(const Mat3& gram);

/// Gram-Schmidt change of basis; the result has gram exactly the identity.
/// Throws NOT_POSITIVE_DEFINITE when the Cholesky factorisation fails.
MetricLieAlgebra orthonormalize(const MetricLieAlgebra& mla);

/// Expresses the algebra in a new basis u_a = sum_i basis(i, a) v_i.
/// The gram of the result is basis^T G basis.
/// Input brackets are taken to be antisymmetric; only [u_a, u_b] with a < b is computed.
MetricLieAlgebra change_basis(const MetricLieAlgebra& mla, const Mat3& basis);

enum class GroupLabel {
  SU2,
  SL2R_UNIVERSAL_COVER,
  E11,
  HEISENBERG,
  E2_UNIVERSAL_COVER,
  ABELIAN_R3,
  NONUNIMODULAR_SOLVABLE,
};

std::string_view to_string(GroupLabel label);
std::optional<GroupLabel> group_label_from_string(std::string_view name);

struct MilnorForm {
  Mat3 L = Mat3::Zero();
  bool unimodular = false;
  /// Sorted signs (descending: + before 0 before -) of the eigenvalues of
  /// the symmetric part of L. Meaningful only when unimodular.
  std::array<int, 3> eigen_signs{};
  Vec3 eigenvalues = Vec3::Zero();
  GroupLabel group_label = GroupLabel::NONUNIMODULAR_SOLVABLE;
};

/// Milnor's map L(e1) = [e2,e3], L(e2) = [e3,e1], L(e3) = [e1,e2], written
/// column-wise in the (orthonormal, positively oriented) basis.
MilnorForm milnor_map(const MetricLieAlgebra& mla, double tol = kStructureTol);

/// Milnor's sign table for unimodular 3-dimensional Lie algebras.
GroupLabel classify_unimodular(const MilnorForm& mf, double tol = kStructureTol);

std::array<int, 3> eigen_sign_pattern(const Vec3& eigenvalues, double tol);

/// Brackets of the left-invariant frame carrying the given constant
/// Christoffel table, from [X,Y] = nabla_X Y - nabla_Y X. The frame is
/// orthonormal. Throws JACOBI_VIOLATION when the brackets are not a Lie
/// algebra, i.e. no Lie group carries such a frame.
MetricLieAlgebra christoffel_to_brackets(const ChristoffelTable& table,
                                         double tol = kStructureTol);

}  // namespace cvc
