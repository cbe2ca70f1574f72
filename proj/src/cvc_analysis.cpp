#include "cvc/cvc_analysis.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "cvc/error.hpp"

namespace cvc {

std::string_view to_string(Extremality e) {
  switch (e) {
    case Extremality::SEC_AT_MOST: return "SEC_AT_MOST";
    case Extremality::SEC_AT_LEAST: return "SEC_AT_LEAST";
    case Extremality::BOTH: return "BOTH";
    case Extremality::NEITHER: return "NEITHER";
  }
  return "UNKNOWN";
}

namespace {

Extremality extremality_of(const Vec3& t, double epsilon, double tol) {
  const bool at_most = t.maxCoeff() <= epsilon + tol;
  const bool at_least = t.minCoeff() >= epsilon - tol;
  if (at_most && at_least) return Extremality::BOTH;
  if (at_most) return Extremality::SEC_AT_MOST;
  if (at_least) return Extremality::SEC_AT_LEAST;
  return Extremality::NEITHER;
}

// Fixes the sign of a direction so that its largest component is positive.
Vec3 canonical_sign(const Vec3& v) {
  Eigen::Index idx = 0;
  v.cwiseAbs().maxCoeff(&idx);
  return v(idx) < 0 ? Vec3(-v) : v;
}

}  // namespace

Extremality extremality(const CurvatureData& cd, double epsilon, double tol) {
  return extremality_of(cd.lambda_triple, epsilon, tol);
}

CvcReport cvc_status(const CurvatureData& cd, double epsilon, double tol) {
  CvcReport rep;
  rep.epsilon = epsilon;
  rep.tol = tol;
  rep.lambda_triple = cd.lambda_triple;

  std::array<double, 3> sorted{cd.lambda_triple(0), cd.lambda_triple(1), cd.lambda_triple(2)};
  std::sort(sorted.begin(), sorted.end());
  rep.is_cvc = std::abs(sorted[1] - epsilon) <= tol;
  rep.isotropic = sorted[2] - sorted[0] <= tol;
  rep.extremality = extremality_of(cd.lambda_triple, epsilon, tol);

  if (rep.is_cvc && !rep.isotropic && rep.extremality != Extremality::NEITHER) {
    // Exactly two entries sit at eps; the third is lambda and marks e3.
    Eigen::Index m = 0;
    (cd.lambda_triple.array() - epsilon).abs().maxCoeff(&m);
    rep.lambda = cd.lambda_triple(m);
    rep.e3_direction = canonical_sign(cd.diag_frame.col(m));
  }
  return rep;
}

Vec3 e3_direction(const CurvatureData& cd, double epsilon, double tol) {
  const CvcReport rep = cvc_status(cd, epsilon, tol);
  if (rep.is_cvc && rep.isotropic) {
    throw Error(ErrorCode::IsotropicPoint, "lambda equals epsilon; e3 is undefined");
  }
  if (!rep.e3_direction) {
    throw Error(ErrorCode::NotCvcExtremal, "point is not an extremal cvc point");
  }
  return *rep.e3_direction;
}

namespace {

template <class F>
double golden_extreme(const F& fn, double a, double b, bool maximize) {
  const double r = 0.5 * (std::sqrt(5.0) - 1.0);
  const double sign = maximize ? -1.0 : 1.0;
  double x1 = b - r * (b - a);
  double x2 = a + r * (b - a);
  double f1 = sign * fn(x1);
  double f2 = sign * fn(x2);
  for (int it = 0; it < 80 && b - a > 1e-12; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - r * (b - a);
      f1 = sign * fn(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + r * (b - a);
      f2 = sign * fn(x2);
    }
  }
  return sign * std::min(f1, f2);
}

template <class Sec>
bool sweep_all(double epsilon, const BruteforceOptions& opt, const Sec& sec) {
  const double dphi = std::numbers::pi / opt.n_angles;
  std::vector<double> cs(static_cast<std::size_t>(opt.n_angles));
  std::vector<double> sn(cs.size());
  for (std::size_t k = 0; k < cs.size(); ++k) {
    cs[k] = std::cos(dphi * static_cast<double>(k));
    sn[k] = std::sin(dphi * static_cast<double>(k));
  }
  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int n = 0; n < opt.n_vectors; ++n) {
    Vec3 v(normal(rng), normal(rng), normal(rng));
    if (v.norm() < 1e-12) {
      --n;
      continue;
    }
    v.normalize();
    Eigen::Index least = 0;
    v.cwiseAbs().minCoeff(&least);
    const Vec3 w1 = v.cross(Vec3::Unit(least)).normalized();
    const Vec3 w2 = v.cross(w1);
    auto at = [&](double phi) { return sec(v, std::cos(phi) * w1 + std::sin(phi) * w2); };
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    int k_lo = 0, k_hi = 0;
    // sec(v ^ w) depends on w only up to sign, so half a turn covers every plane.
    for (int k = 0; k < opt.n_angles; ++k) {
      const auto idx = static_cast<std::size_t>(k);
      const double s = sec(v, cs[idx] * w1 + sn[idx] * w2);
      if (s < lo) { lo = s; k_lo = k; }
      if (s > hi) { hi = s; k_hi = k; }
    }
    // At an extremal point eps is the exact min or max of the sweep, which a
    // grid only approaches to O(dphi^2); polish both ends locally.
    lo = std::min(lo, golden_extreme(at, dphi * (k_lo - 1), dphi * (k_lo + 1), false));
    hi = std::max(hi, golden_extreme(at, dphi * (k_hi - 1), dphi * (k_hi + 1), true));
    if (epsilon < lo - opt.tol || epsilon > hi + opt.tol) return false;
  }
  return true;
}

}  // namespace

bool cvc_bruteforce(const CurvatureData& cd, double epsilon, const BruteforceOptions& opt) {
  return sweep_all(epsilon, opt, [&cd](const Vec3& v, const Vec3& w) {
    return riemann_form(cd, v, w, w, v);
  });
}

bool cvc_bruteforce(const Vec3& lambda_triple, double epsilon, const BruteforceOptions& opt) {
  return sweep_all(epsilon, opt, [&lambda_triple](const Vec3& v, const Vec3& w) {
    return sec_quadratic(lambda_triple, v.cross(w), 1e-6);
  });
}

}  // namespace cvc
