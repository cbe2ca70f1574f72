#include "cvc/geodesic_ode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "cvc/error.hpp"
#include "cvc/rk4.hpp"

namespace cvc {

namespace {

// l below this is treated as a zero of l.
constexpr double kEllFloor = 1e-12;

void require_epsilon(const EllParams& p) {
  if (p.epsilon < -1 || p.epsilon > 1) {
    throw Error(ErrorCode::ParameterOutOfRange,
                "epsilon must be -1, 0 or 1, got " + std::to_string(p.epsilon));
  }
}

[[noreturn]] void ell_nonpositive(double t, double value) {
  throw Error(ErrorCode::EllNonpositive,
              "l(" + std::to_string(t) + ") = " + std::to_string(value) + " <= 0");
}

}  // namespace

double ell_closed_form(const EllParams& p, double t) {
  require_epsilon(p);
  const double tr = p.trA0;
  const double d = p.detA0;
  switch (p.epsilon) {
    case -1:
      // Exponential form: sinh/cosh would cancel when one coefficient vanishes.
      return 0.25 * ((tr + d + 1) * std::exp(2 * t) + (d + 1 - tr) * std::exp(-2 * t) + (2 - 2 * d));
    case 0:
      return d * t * t + tr * t + 1.0;
    default: {
      const double k = p.k();
      return 0.5 * k + (1.0 - 0.5 * k) * std::cos(2 * t) + 0.5 * tr * std::sin(2 * t);
    }
  }
}

double ell_derivative(const EllParams& p, double t) {
  require_epsilon(p);
  const double tr = p.trA0;
  const double d = p.detA0;
  switch (p.epsilon) {
    case -1:
      return 0.5 * ((tr + d + 1) * std::exp(2 * t) - (d + 1 - tr) * std::exp(-2 * t));
    case 0:
      return 2 * d * t + tr;
    default:
      return -(2.0 - p.k()) * std::sin(2 * t) + tr * std::cos(2 * t);
  }
}

EllMinimum ell_minimum(const EllParams& p, double t0, double t1) {
  require_epsilon(p);
  if (t1 < t0) std::swap(t0, t1);
  std::vector<double> candidates{t0, t1};
  const double tr = p.trA0;
  const double d = p.detA0;
  switch (p.epsilon) {
    case -1: {
      // l = (P e^{2t} + N e^{-2t} + c3) / 4
      const double pp = tr + d + 1;
      const double nn = d + 1 - tr;
      if (pp != 0.0 && nn / pp > 0.0) candidates.push_back(0.25 * std::log(nn / pp));
      break;
    }
    case 0:
      if (d != 0.0) candidates.push_back(-tr / (2 * d));
      break;
    default: {
      const double amp = 2.0 - p.k();
      if (amp != 0.0 || tr != 0.0) {
        const double base = 0.5 * std::atan2(tr, amp);
        const double period = 0.5 * std::numbers::pi;
        const long m0 = static_cast<long>(std::floor((t0 - base) / period));
        const long m1 = static_cast<long>(std::ceil((t1 - base) / period));
        for (long m = m0; m <= m1; ++m) candidates.push_back(base + period * static_cast<double>(m));
      }
      break;
    }
  }
  EllMinimum best{t0, std::numeric_limits<double>::infinity()};
  for (double t : candidates) {
    if (t < t0 || t > t1) continue;
    const double v = ell_closed_form(p, t);
    if (v < best.value) best = {t, v};
  }
  return best;
}

TrDet trA_detA_along(const EllParams& p, double t) {
  const double ell = ell_closed_form(p, t);
  if (!(ell > kEllFloor)) ell_nonpositive(t, ell);
  return {ell_derivative(p, t) / ell, p.k() / ell - p.epsilon};
}

namespace {

using FrameState = State<9>;

enum Slot { kEll, kTr, kDet, kLambda, kB, kSigma, kTau, kF, kG };

FrameState frame_rhs(const FrameState& y, double eps, double c) {
  const double tr = y[kTr];
  const double a11 = 0.5 * tr + y[kSigma];
  const double a22 = 0.5 * tr - y[kSigma];
  const double a12 = y[kTau] + y[kB];
  const double a21 = y[kTau] - y[kB];
  FrameState d;
  d[kEll] = tr * y[kEll];
  d[kTr] = 2.0 * (y[kDet] - eps) - tr * tr;
  d[kDet] = -tr * (y[kDet] + eps);
  d[kLambda] = -tr * (y[kLambda] - eps);
  d[kB] = -tr * y[kB];
  d[kSigma] = 2.0 * c * y[kTau] - tr * y[kSigma];
  d[kTau] = -2.0 * c * y[kSigma] - tr * y[kTau];
  d[kF] = -y[kF] * a22 + y[kG] * (c + a21);
  d[kG] = -y[kG] * a11 - y[kF] * (c - a12);
  return d;
}

}  // namespace

OdeTrajectory integrate_frame_ode(const EllParams& p, const FrameInitial& init, double t_min,
                                  double t_max, double step) {
  require_epsilon(p);
  if (!(step > 0.0) || !(t_max >= t_min) || !std::isfinite(t_min) || !std::isfinite(t_max)) {
    throw Error(ErrorCode::ParameterOutOfRange, "need step > 0 and t_min <= t_max");
  }
  const EllMinimum lowest = ell_minimum(p, std::min(t_min, 0.0), std::max(t_max, 0.0));
  if (!(lowest.value > kEllFloor)) ell_nonpositive(lowest.t, lowest.value);

  const double eps = p.epsilon;
  const long n = std::max(1L, static_cast<long>(std::ceil((t_max - t_min) / step - 1e-9)));
  std::vector<double> times(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i)
    times[static_cast<std::size_t>(i)] = t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(n);
  if (t_max == t_min) times.resize(1);

  const FrameState y0{1.0,         p.trA0,      p.detA0,     init.lambda0, init.b0,
                      init.sigma0, init.tau0,   init.f0,     init.g0};
  auto rhs = [eps, c = init.c](double, const FrameState& y) { return frame_rhs(y, eps, c); };

  std::vector<FrameState> states(times.size());
  // March outward from t = 0 in both directions so each grid value depends
  // only on the initial data, not on where the span starts.
  const auto first_nonneg = std::lower_bound(times.begin(), times.end(), 0.0) - times.begin();
  {
    FrameState y = y0;
    double t = 0.0;
    for (auto i = first_nonneg; i < static_cast<long>(times.size()); ++i) {
      y = rk4_integrate<9>(rhs, t, y, times[i], step);
      t = times[i];
      states[i] = y;
    }
  }
  {
    FrameState y = y0;
    double t = 0.0;
    for (auto i = first_nonneg - 1; i >= 0; --i) {
      y = rk4_integrate<9>(rhs, t, y, times[i], step);
      t = times[i];
      states[i] = y;
    }
  }

  OdeTrajectory out;
  out.times = times;
  const double gap = init.lambda0 - eps;
  out.K = gap != 0.0 ? (p.detA0 + eps) / gap : std::numeric_limits<double>::quiet_NaN();
  out.C = gap != 0.0 ? init.b0 / gap : std::numeric_limits<double>::quiet_NaN();

  double prev_theta = std::numeric_limits<double>::quiet_NaN();
  for (const FrameState& y : states) {
    if (!(y[kEll] > 0.0) || !std::isfinite(y[kEll])) {
      throw Error(ErrorCode::EllNonpositive, "numerical l left the positive range");
    }
    out.ell.push_back(y[kEll]);
    out.trA.push_back(y[kTr]);
    out.detA.push_back(y[kDet]);
    out.lambda.push_back(y[kLambda]);
    out.b.push_back(y[kB]);
    out.sigma.push_back(y[kSigma]);
    out.tau.push_back(y[kTau]);
    out.f.push_back(y[kF]);
    out.g.push_back(y[kG]);

    const double s = y[kSigma];
    const double tau = y[kTau];
    double theta = std::numeric_limits<double>::quiet_NaN();
    if (s * s + tau * tau > 1e-24) {
      theta = 0.5 * std::atan2(tau, s);
      if (std::isnan(prev_theta)) {
        if (theta < 0.0) theta += std::numbers::pi;
      } else {
        theta += std::numbers::pi * std::round((prev_theta - theta) / std::numbers::pi);
      }
    }
    out.theta.push_back(theta);
    prev_theta = theta;

    const double a = 0.5 * y[kTr];
    const double model_det = a * a - s * s - tau * tau + y[kB] * y[kB];
    out.frame_constraint = std::max(out.frame_constraint, std::abs(y[kDet] - model_det));
  }
  return out;
}

std::string_view to_string(AsymptoticClass c) {
  switch (c) {
    case AsymptoticClass::S_MINUS2_2: return "S_MINUS2_2";
    case AsymptoticClass::S_0_2: return "S_0_2";
    case AsymptoticClass::S_MINUS2_0: return "S_MINUS2_0";
    case AsymptoticClass::S_0_0: return "S_0_0";
  }
  return "UNKNOWN";
}

bool admissible_minus1(double trA0, double detA0) {
  const double c1 = trA0;
  const double c2 = detA0 + 1.0;
  const double pp = c1 + c2;
  const double nn = c2 - c1;
  const double c3 = 4.0 - 2.0 * c2;
  if (pp < 0.0 || nn < 0.0) return false;
  // 4 l = P e^{2t} + N e^{-2t} + c3
  if (pp > 0.0 && nn > 0.0) return 2.0 * std::sqrt(pp * nn) + c3 > 0.0;
  if (pp == 0.0 && nn == 0.0) return c3 > 0.0;
  return c3 >= 0.0;
}

AsymptoticClass asymptotic_class_minus1(double trA0, double detA0) {
  if (!admissible_minus1(trA0, detA0)) {
    throw Error(ErrorCode::InvalidInitialData,
                "l vanishes for trA0 = " + std::to_string(trA0) +
                    ", detA0 = " + std::to_string(detA0));
  }
  const double pp = trA0 + detA0 + 1.0;
  const double nn = detA0 + 1.0 - trA0;
  if (pp == 0.0 && nn == 0.0) return AsymptoticClass::S_0_0;
  if (nn == 0.0) return AsymptoticClass::S_0_2;
  if (pp == 0.0) return AsymptoticClass::S_MINUS2_0;
  return AsymptoticClass::S_MINUS2_2;
}

std::pair<double, double> class_limits(AsymptoticClass c) {
  switch (c) {
    case AsymptoticClass::S_MINUS2_2: return {-2.0, 2.0};
    case AsymptoticClass::S_0_2: return {0.0, 2.0};
    case AsymptoticClass::S_MINUS2_0: return {-2.0, 0.0};
    case AsymptoticClass::S_0_0: return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

std::pair<double, double> tr_limits_minus1(double trA0, double detA0) {
  if (!admissible_minus1(trA0, detA0)) {
    throw Error(ErrorCode::InvalidInitialData, "l vanishes somewhere");
  }
  const double pp = trA0 + detA0 + 1.0;
  const double nn = detA0 + 1.0 - trA0;
  const double c3 = 2.0 - 2.0 * detA0;
  // tr A = 2 (P e^{2t} - N e^{-2t}) / (P e^{2t} + N e^{-2t} + c3)
  const double plus = pp > 0.0 ? 2.0 : (nn > 0.0 && c3 == 0.0 ? -2.0 : 0.0);
  const double minus = nn > 0.0 ? -2.0 : (pp > 0.0 && c3 == 0.0 ? 2.0 : 0.0);
  return {minus, plus};
}

std::pair<double, double> fg_system_minus1(double mu, double f0, double g0, double t) {
  if (mu == 0.0) throw Error(ErrorCode::ParameterOutOfRange, "mu must be nonzero");
  const double c1 = 0.5 * (f0 + g0 / mu);
  const double c2 = 0.5 * (f0 - g0 / mu);
  const double up = c1 * std::exp(t);
  const double down = c2 * std::exp(-t);
  return {up + down, mu * (up - down)};
}

double theta_evolution_cvc0(double mu, double theta0, double t) {
  if (mu == 0.0) throw Error(ErrorCode::ParameterOutOfRange, "mu must be nonzero");
  if (!(std::abs(theta0) < 0.5 * std::numbers::pi)) {
    throw Error(ErrorCode::ParameterOutOfRange, "theta0 must lie in (-pi/2, pi/2)");
  }
  return std::atan(std::tan(theta0) - mu * t);
}

}  // namespace cvc
