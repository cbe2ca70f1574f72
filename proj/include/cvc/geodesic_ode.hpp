#pragma once

#include <string_view>
#include <utility>
#include <vector>

namespace cvc {

/// Initial data of tr A and det A at t = 0 on an e3-geodesic of a cvc(eps)
/// manifold, eps in {-1, 0, 1}.
struct EllParams {
  int epsilon = -1;
  double trA0 = 0.0;
  double detA0 = 0.0;

  double k() const { return detA0 + epsilon; }
};

/// Solution of l'' + 4 eps l = 2k with l(0) = 1, l'(0) = trA0.
/// Throws PARAMETER_OUT_OF_RANGE unless eps is -1, 0 or 1.
double ell_closed_form(const EllParams& p, double t);
double ell_derivative(const EllParams& p, double t);

struct EllMinimum {
  double t = 0.0;
  double value = 0.0;
};

/// Minimum of the closed-form l over [t0, t1], located exactly from its
/// critical points.
EllMinimum ell_minimum(const EllParams& p, double t0, double t1);

struct TrDet {
  double trA = 0.0;
  double detA = 0.0;
};

/// tr A = l'/l and det A = k/l - eps. Throws ELL_NONPOSITIVE where l <= 0.
TrDet trA_detA_along(const EllParams& p, double t);

/// Remaining frame data at t = 0. c is constant along the geodesic.
struct FrameInitial {
  double lambda0 = 0.0;
  double b0 = 0.0;
  double sigma0 = 0.0;
  double tau0 = 0.0;
  double c = 0.0;
  double f0 = 0.0;
  double g0 = 0.0;
};

struct OdeTrajectory {
  std::vector<double> times;
  std::vector<double> ell, trA, detA, lambda, b, sigma, tau, f, g, theta;
  /// det A + eps = K (lambda - eps) and b = C (lambda - eps); NaN when
  /// lambda0 == eps.
  double K = 0.0;
  double C = 0.0;
  /// max |det A - (a^2 - sigma^2 - tau^2 + b^2)| on the grid. The system
  /// propagates this mismatch (it decays like 1/l^2) but does not enforce it,
  /// so it is zero only for consistent initial data.
  double frame_constraint = 0.0;
};

/// RK4 integration of the frame system from t = 0 to every point of an
/// evenly spaced grid on [t_min, t_max] with spacing at most step. Throws
/// ELL_NONPOSITIVE (naming t) if l vanishes anywhere between 0 and the grid.
OdeTrajectory integrate_frame_ode(const EllParams& p, const FrameInitial& init, double t_min,
                                  double t_max, double step);

/// Named by the limits of tr A at t -> -inf and t -> +inf.
enum class AsymptoticClass { S_MINUS2_2, S_0_2, S_MINUS2_0, S_0_0 };

std::string_view to_string(AsymptoticClass c);

/// True iff l stays positive on the whole line for eps = -1.
bool admissible_minus1(double trA0, double detA0);

/// Class by the signs of c1 + c2 and c1 - c2, c1 = trA0, c2 = detA0 + 1.
/// Throws INVALID_INITIAL_DATA when l vanishes somewhere.
AsymptoticClass asymptotic_class_minus1(double trA0, double detA0);

/// Limits (t -> -inf, t -> +inf) of tr A a class declares.
std::pair<double, double> class_limits(AsymptoticClass c);

/// Exact limits of tr A computed from the closed form of l. They differ from
/// class_limits() only at (2, 1) and (-2, 1), where tr A is constant +-2.
std::pair<double, double> tr_limits_minus1(double trA0, double detA0);

/// Solution of f' = g / mu, g' = mu f.
std::pair<double, double> fg_system_minus1(double mu, double f0, double g0, double t);

/// Solution of theta' = -mu cos^2 theta with |theta0| < pi/2.
double theta_evolution_cvc0(double mu, double theta0, double t);

}  // namespace cvc
