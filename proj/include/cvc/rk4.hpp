#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace cvc {

template <std::size_t N>
using State = std::array<double, N>;

/// One classical fourth-order Runge-Kutta step of y' = rhs(t, y).
template <std::size_t N, class Rhs>
State<N> rk4_step(const Rhs& rhs, double t, const State<N>& y, double h) {
  auto axpy = [](const State<N>& base, double s, const State<N>& k) {
    State<N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = base[i] + s * k[i];
    return out;
  };
  const State<N> k1 = rhs(t, y);
  const State<N> k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1));
  const State<N> k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2));
  const State<N> k4 = rhs(t + h, axpy(y, h, k3));
  State<N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

/// Fixed-step integration from t0 to t1 (either direction) using
/// ceil(|t1 - t0| / h) equal steps of size at most h.
template <std::size_t N, class Rhs>
State<N> rk4_integrate(const Rhs& rhs, double t0, const State<N>& y0, double t1, double h) {
  const double span = t1 - t0;
  const long n = static_cast<long>(std::ceil(std::abs(span) / h - 1e-9));
  State<N> y = y0;
  if (n <= 0) return y;
  const double step = span / static_cast<double>(n);
  for (long i = 0; i < n; ++i) y = rk4_step<N>(rhs, t0 + static_cast<double>(i) * step, y, step);
  return y;
}

}  // namespace cvc
