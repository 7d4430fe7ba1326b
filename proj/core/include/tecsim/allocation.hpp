#pragma once

#include <Eigen/Core>

#include "tecsim/airframe.hpp"

namespace tecsim {

/// Linearized map from (throttle, pitch) deviations to energy-rate channels.
///
///   [E_dot]   [ dE/d(delta_t)  dE/d(theta) ] [delta_t]
///   [B_dot] = [ dB/d(delta_t)  dB/d(theta) ] [theta  ]
///
/// with a1 = -g cos(theta* - alpha*), a2 = 2 k_T1 delta_t* / m:
/// throttle column (a2/g, -a2/g), pitch column (a1/g + 1, -a1/g + 1).
struct AllocationMatrix {
  Eigen::Matrix2d A = Eigen::Matrix2d::Identity();
  Eigen::Matrix2d inverse = Eigen::Matrix2d::Identity();
  double condition = 1.0;
  double a1 = 0.0;  ///< dV_dot/d(theta), m/s^2/rad
  double a2 = 0.0;  ///< dV_dot/d(delta_t), m/s^2
  double a3 = 0.0;  ///< dV_dot/dV_a, 1/s (diagnostic, not part of A)

  double dE_dthrottle() const { return A(0, 0); }
  double dE_dtheta() const { return A(0, 1); }
  double dB_dthrottle() const { return A(1, 0); }
  double dB_dtheta() const { return A(1, 1); }

  /// (delta_t, theta) deviations that produce the channel demands.
  Eigen::Vector2d solve(const Eigen::Vector2d& channels) const { return inverse * channels; }
  Eigen::Vector2d apply(const Eigen::Vector2d& deviations) const { return A * deviations; }
};

inline constexpr double kMinAllocationDeterminant = 1e-6;

/// Builds A at the trim point. Throws SingularAllocationError when
/// |det A| < kMinAllocationDeterminant or the condition number exceeds
/// `max_condition`.
AllocationMatrix compute_allocation(const TrimPoint& trim, const AirframeParams& params,
                                    double max_condition = 1e6);

}  // namespace tecsim
