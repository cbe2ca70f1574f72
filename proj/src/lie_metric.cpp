#include "cvc/lie_metric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvc/error.hpp"

namespace cvc {

MetricLieAlgebra MetricLieAlgebra::from_nested(
    const std::vector<std::vector<std::vector<double>>>& c,
    const std::vector<std::vector<double>>& gram) {
  if (c.size() != 3) {
    throw Error(ErrorCode::MalformedInput, "structure_constants must be 3x3x3");
  }
  MetricLieAlgebra out;
  for (int i = 0; i < 3; ++i) {
    if (c[i].size() != 3) {
      throw Error(ErrorCode::MalformedInput, "structure_constants must be 3x3x3");
    }
    for (int j = 0; j < 3; ++j) {
      if (c[i][j].size() != 3) {
        throw Error(ErrorCode::MalformedInput, "structure_constants must be 3x3x3");
      }
      for (int k = 0; k < 3; ++k) out.structure_constants[i][j][k] = c[i][j][k];
    }
  }
  if (gram.size() != 3) throw Error(ErrorCode::MalformedInput, "gram must be 3x3");
  for (int i = 0; i < 3; ++i) {
    if (gram[i].size() != 3) throw Error(ErrorCode::MalformedInput, "gram must be 3x3");
    for (int j = 0; j < 3; ++j) out.gram(i, j) = gram[i][j];
  }
  return out;
}

Vec3 MetricLieAlgebra::bracket(int i, int j) const {
  const auto& row = structure_constants[i][j];
  return Vec3(row[0], row[1], row[2]);
}

Vec3 MetricLieAlgebra::bracket(const Vec3& x, const Vec3& y) const {
  Vec3 out = Vec3::Zero();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out += x(i) * y(j) * bracket(i, j);
  return out;
}

double jacobi_residual(const Tensor3& c) {
  // [[v_i,v_j],v_k] = sum_m c_ijm [v_m, v_k]
  auto nested = [&c](int i, int j, int k, int n) {
    double s = 0.0;
    for (int m = 0; m < 3; ++m) s += c[i][j][m] * c[m][k][n];
    return s;
  };
  double worst = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int n = 0; n < 3; ++n) {
          const double r = nested(i, j, k, n) + nested(j, k, i, n) + nested(k, i, j, n);
          worst = std::max(worst, std::abs(r));
        }
  return worst;
}

std::string_view ValidationReport::first_failure() const {
  if (!antisymmetry_ok()) return "antisymmetry";
  if (!jacobi_ok()) return "jacobi_identity";
  if (!positivity_ok()) return "gram_positive_definite";
  return {};
}

ValidationReport validate(const MetricLieAlgebra& mla, double tol) {
  ValidationReport rep;
  rep.tol = tol;
  const auto& c = mla.structure_constants;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        rep.antisymmetry = std::max(rep.antisymmetry, std::abs(c[i][j][k] + c[j][i][k]));
  rep.jacobi = jacobi_residual(c);
  rep.gram_symmetry = (mla.gram - mla.gram.transpose()).cwiseAbs().maxCoeff();
  const Mat3 sym = 0.5 * (mla.gram + mla.gram.transpose());
  rep.gram_min_eigenvalue = Eigen::SelfAdjointEigenSolver<Mat3>(sym).eigenvalues()(0);
  return rep;
}

MetricLieAlgebra change_basis(const MetricLieAlgebra& mla, const Mat3& basis) {
  const Mat3 inv = basis.inverse();
  MetricLieAlgebra out;
  // Only a < b is computed so the result is antisymmetric to the last bit.
  for (int a = 0; a < 3; ++a)
    for (int b = a + 1; b < 3; ++b) {
      const Vec3 in_new = inv * mla.bracket(basis.col(a), basis.col(b));
      for (int k = 0; k < 3; ++k) {
        out.structure_constants[a][b][k] = in_new(k);
        out.structure_constants[b][a][k] = -in_new(k);
      }
    }
  out.gram = basis.transpose() * mla.gram * basis;
  return out;
}

Mat3 orthonormal_basis(const Mat3& gram) {
  const Mat3 sym = 0.5 * (gram + gram.transpose());
  Eigen::LLT<Mat3> llt(sym);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::NotPositiveDefinite, "gram matrix has no Cholesky factor");
  }
  const Mat3 lower = llt.matrixL();
  return lower.transpose().triangularView<Eigen::Upper>().solve(Mat3::Identity());
}

MetricLieAlgebra orthonormalize(const MetricLieAlgebra& mla) {
  MetricLieAlgebra out = change_basis(mla, orthonormal_basis(mla.gram));
  out.gram = Mat3::Identity();
  return out;
}

std::string_view to_string(GroupLabel label) {
  switch (label) {
    case GroupLabel::SU2: return "SU2";
    case GroupLabel::SL2R_UNIVERSAL_COVER: return "SL2R_UNIVERSAL_COVER";
    case GroupLabel::E11: return "E11";
    case GroupLabel::HEISENBERG: return "HEISENBERG";
    case GroupLabel::E2_UNIVERSAL_COVER: return "E2_UNIVERSAL_COVER";
    case GroupLabel::ABELIAN_R3: return "ABELIAN_R3";
    case GroupLabel::NONUNIMODULAR_SOLVABLE: return "NONUNIMODULAR_SOLVABLE";
  }
  return "UNKNOWN";
}

std::optional<GroupLabel> group_label_from_string(std::string_view name) {
  for (auto g : {GroupLabel::SU2, GroupLabel::SL2R_UNIVERSAL_COVER, GroupLabel::E11,
                 GroupLabel::HEISENBERG, GroupLabel::E2_UNIVERSAL_COVER,
                 GroupLabel::ABELIAN_R3, GroupLabel::NONUNIMODULAR_SOLVABLE}) {
    if (to_string(g) == name) return g;
  }
  return std::nullopt;
}

std::array<int, 3> eigen_sign_pattern(const Vec3& eigenvalues, double tol) {
  std::array<int, 3> signs{};
  for (int i = 0; i < 3; ++i) {
    const double v = eigenvalues(i);
    signs[i] = std::abs(v) < tol ? 0 : (v > 0 ? 1 : -1);
  }
  std::sort(signs.begin(), signs.end(), std::greater<>());
  return signs;
}

namespace {

void require_orthonormal(const MetricLieAlgebra& mla, double tol) {
  const double dev = (mla.gram - Mat3::Identity()).cwiseAbs().maxCoeff();
  if (dev > tol) {
    throw Error(ErrorCode::NotOrthonormal,
                "gram deviates from identity by " + std::to_string(dev));
  }
}

}  // namespace

MilnorForm milnor_map(const MetricLieAlgebra& mla, double tol) {
  require_orthonormal(mla, tol);
  MilnorForm mf;
  mf.L.col(0) = mla.bracket(1, 2);
  mf.L.col(1) = mla.bracket(2, 0);
  mf.L.col(2) = mla.bracket(0, 1);
  mf.unimodular = (mf.L - mf.L.transpose()).cwiseAbs().maxCoeff() <= tol;
  const Mat3 sym = 0.5 * (mf.L + mf.L.transpose());
  mf.eigenvalues = Eigen::SelfAdjointEigenSolver<Mat3>(sym).eigenvalues();
  mf.eigen_signs = eigen_sign_pattern(mf.eigenvalues, tol);
  mf.group_label = mf.unimodular ? classify_unimodular(mf, tol)
                                 : GroupLabel::NONUNIMODULAR_SOLVABLE;
  return mf;
}

GroupLabel classify_unimodular(const MilnorForm& mf, double tol) {
  if ((mf.L - mf.L.transpose()).cwiseAbs().maxCoeff() > tol) {
    throw Error(ErrorCode::NotUnimodular, "L is not self-adjoint");
  }
  const Vec3 ev = Eigen::SelfAdjointEigenSolver<Mat3>(0.5 * (mf.L + mf.L.transpose()))
                      .eigenvalues();
  const auto s = eigen_sign_pattern(ev, tol);
  int pos = 0, neg = 0, zero = 0;
  for (int v : s) (v > 0 ? pos : v < 0 ? neg : zero)++;

  if (zero == 3) return GroupLabel::ABELIAN_R3;
  if (zero == 2) return GroupLabel::HEISENBERG;
  if (zero == 1) return (pos == 1 && neg == 1) ? GroupLabel::E11
                                               : GroupLabel::E2_UNIVERSAL_COVER;
  return (pos == 3 || neg == 3) ? GroupLabel::SU2 : GroupLabel::SL2R_UNIVERSAL_COVER;
}

MetricLieAlgebra christoffel_to_brackets(const ChristoffelTable& t, double tol) {
  MetricLieAlgebra out;
  auto set = [&out](int i, int j, const Vec3& v) {
    for (int k = 0; k < 3; ++k) {
      out.structure_constants[i][j][k] = v(k);
      out.structure_constants[j][i][k] = -v(k);
    }
  };
  set(0, 1, Vec3(t.g, -t.f, t.a21 - t.a12));
  set(0, 2, Vec3(t.a11, t.a12 - t.c, 0.0));
  set(1, 2, Vec3(t.a21 + t.c, t.a22, 0.0));
  const double r = jacobi_residual(out.structure_constants);
  if (r > tol) {
    throw Error(ErrorCode::JacobiViolation,
                "table brackets violate the Jacobi identity by " + std::to_string(r));
  }
  return out;
}

}  // namespace cvc
