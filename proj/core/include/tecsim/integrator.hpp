#pragma once

#include <array>
#include <cstddef>

namespace tecsim {

/// Classical fixed-step fourth-order Runge-Kutta step for dx/dt = f(t, x).
template <std::size_t N, typename F>
std::array<double, N> rk4_step(F&& f, double t, const std::array<double, N>& x, double dt) {
  auto axpy = [](const std::array<double, N>& a, double s, const std::array<double, N>& b) {
    std::array<double, N> out{};
    for (std::size_t i = 0; i < N; ++i) out[i] = a[i] + s * b[i];
    return out;
  };

  const auto k1 = f(t, x);
  const auto k2 = f(t + 0.5 * dt, axpy(x, 0.5 * dt, k1));
  const auto k3 = f(t + 0.5 * dt, axpy(x, 0.5 * dt, k2));
  const auto k4 = f(t + dt, axpy(x, dt, k3));

  std::array<double, N> out{};
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = x[i] + dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace tecsim
