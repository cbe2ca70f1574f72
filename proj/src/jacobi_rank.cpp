#include "cvc/jacobi_rank.hpp"

#include <array>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "cvc/adapted_frame.hpp"
#include "cvc/error.hpp"
#include "cvc/rk4.hpp"

namespace cvc {

double JacobiSystem::sectional(const Vec3& J) const {
  return J.dot(curvature_op * J) / J.squaredNorm();
}

JacobiSystem jacobi_system(const FamilyModel& model, const Vec3& dir, double tol) {
  if (!model.table || !model.algebra) {
    throw Error(ErrorCode::UnsupportedModel, model.name + " has no left-invariant frame");
  }
  if (std::abs(dir.norm() - 1.0) > 1e-9) {
    throw Error(ErrorCode::NotUnit, "geodesic direction must be a unit vector");
  }
  const ConnectionCoefficients conn = connection_from_table(*model.table);
  const Vec3 accel = conn.covariant(dir, dir);
  if (accel.norm() > tol) {
    throw Error(ErrorCode::NotGeodesicDirection,
                "nabla_dir dir has norm " + std::to_string(accel.norm()));
  }
  JacobiSystem sys;
  sys.dir = dir;
  for (int i = 0; i < 3; ++i) {
    sys.omega.col(i) = conn.covariant(dir, Vec3::Unit(i));
    Vec3 r = Vec3::Zero();
    for (int l = 0; l < 3; ++l) r(l) = riemann_form(model.curvature, Vec3::Unit(i), dir, dir, Vec3::Unit(l));
    sys.curvature_op.col(i) = r;
  }
  return sys;
}

namespace {

using JState = State<6>;

JState pack(const JacobiState& s) {
  return {s.J(0), s.J(1), s.J(2), s.Jprime(0), s.Jprime(1), s.Jprime(2)};
}

JacobiState unpack(const JState& y, double t) {
  return {Vec3(y[0], y[1], y[2]), Vec3(y[3], y[4], y[5]), t};
}

auto make_rhs(const JacobiSystem& sys) {
  return [&sys](double, const JState& y) {
    const Vec3 J(y[0], y[1], y[2]);
    const Vec3 Jp(y[3], y[4], y[5]);
    const Vec3 dJ = Jp - sys.omega * J;
    const Vec3 dJp = -sys.omega * Jp - sys.curvature_op * J;
    return JState{dJ(0), dJ(1), dJ(2), dJp(0), dJp(1), dJp(2)};
  };
}

}  // namespace

JacobiState jacobi_propagate(const JacobiSystem& sys, const JacobiState& init, double t_end,
                             double step) {
  const JState y = rk4_integrate<6>(make_rhs(sys), init.t, pack(init), t_end, step);
  return unpack(y, t_end);
}

std::vector<JacobiState> jacobi_integrate(const FamilyModel& model, const Vec3& dir,
                                          const JacobiState& init, double t_end, double step) {
  const JacobiSystem sys = jacobi_system(model, dir);
  const auto rhs = make_rhs(sys);
  const double span = t_end - init.t;
  const long n = std::max(1L, static_cast<long>(std::ceil(std::abs(span) / step - 1e-9)));
  const double h = span / static_cast<double>(n);
  std::vector<JacobiState> out{init};
  JState y = pack(init);
  for (long i = 0; i < n; ++i) {
    const double t = init.t + h * static_cast<double>(i);
    y = rk4_step<6>(rhs, t, y, h);
    out.push_back(unpack(y, init.t + h * static_cast<double>(i + 1)));
  }
  return out;
}

RankVerdict hyperbolic_rank_test(const FamilyModel& model, const Vec3& dir,
                                 const RankOptions& opt) {
  const JacobiSystem sys = jacobi_system(model, dir);

  Eigen::Index least = 0;
  dir.cwiseAbs().minCoeff(&least);
  const Vec3 p0 = dir.cross(Vec3::Unit(least)).normalized();
  const Vec3 p1 = dir.cross(p0);
  const std::array<JacobiState, 4> basis{{
      {p0, Vec3::Zero(), 0.0},
      {p1, Vec3::Zero(), 0.0},
      {Vec3::Zero(), p0, 0.0},
      {Vec3::Zero(), p1, 0.0},
  }};

  // phi[s] has the J of each basis field at sample s as its columns.
  const int ns = std::max(2, opt.samples);
  std::vector<Eigen::Matrix<double, 3, 4>> phi(static_cast<std::size_t>(ns));
  for (int b = 0; b < 4; ++b) {
    JacobiState s = basis[static_cast<std::size_t>(b)];
    for (int k = 0; k < ns; ++k) {
      const double t = opt.t_max * k / (ns - 1);
      s = jacobi_propagate(sys, s, t, opt.step);
      phi[static_cast<std::size_t>(k)].col(b) = s.J;
    }
  }

  const Mat3 shifted = sys.curvature_op + Mat3::Identity();
  Eigen::Matrix4d num = Eigen::Matrix4d::Zero();
  Eigen::Matrix4d den = Eigen::Matrix4d::Zero();
  for (const auto& m : phi) {
    const Eigen::Matrix<double, 3, 4> r = shifted * m;
    num += r.transpose() * r;
    den += m.transpose() * m;
  }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::Matrix4d> ges(num, den);
  const Eigen::Vector4d x = ges.eigenvectors().col(0);

  RankVerdict v;
  v.functional_min = ges.eigenvalues()(0);
  double sum_sq = 0.0;
  int counted = 0;
  for (const auto& m : phi) {
    const Vec3 J = m * x;
    if (J.norm() <= 1e-8) continue;
    const double dev = std::abs(sys.sectional(J) + 1.0);
    v.max_sec_deviation = std::max(v.max_sec_deviation, dev);
    sum_sq += dev * dev;
    ++counted;
  }
  v.rms_sec_deviation = counted > 0 ? std::sqrt(sum_sq / counted) : 0.0;
  v.has_hyperbolic_rank_witness =
      counted > 0 && v.rms_sec_deviation < opt.tol && v.max_sec_deviation < opt.tol;
  if (v.has_hyperbolic_rank_witness) {
    JacobiState w;
    for (int b = 0; b < 4; ++b) {
      w.J += x(b) * basis[static_cast<std::size_t>(b)].J;
      w.Jprime += x(b) * basis[static_cast<std::size_t>(b)].Jprime;
    }
    const double scale = std::sqrt(w.J.squaredNorm() + w.Jprime.squaredNorm());
    w.J /= scale;
    w.Jprime /= scale;
    v.witness = w;
  }
  return v;
}

}  // namespace cvc
