#include "tecsim/allocation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <sstream>

#include "tecsim/errors.hpp"

namespace tecsim {

AllocationMatrix compute_allocation(const TrimPoint& trim, const AirframeParams& params,
                                    double max_condition) {
  const double g = params.g;
  const double V = trim.airspeed;
  const double C_D = drag_coefficient(trim.alpha, params) + params.C_D_delta_e * trim.delta_e;

  AllocationMatrix out;
  out.a1 = -g * std::cos(trim.theta - trim.alpha);
  out.a2 = 2.0 * params.k_T1 * trim.delta_t / params.m;
  out.a3 = -(params.rho * params.S * C_D * V + 2.0 * params.k_T2 * V) / params.m;

  const double throttle_gain = out.a2 / g;
  out.A(0, 0) = throttle_gain;
  out.A(1, 0) = -throttle_gain;
  out.A(0, 1) = out.a1 / g + 1.0;
  out.A(1, 1) = -out.a1 / g + 1.0;

  const double det = out.A.determinant();
  if (!(std::abs(det) >= kMinAllocationDeterminant)) {
    std::ostringstream msg;
    msg << "allocation matrix is singular (det = " << det << ")";
    throw SingularAllocationError(msg.str());
  }
  out.inverse = out.A.inverse();

  const Eigen::JacobiSVD<Eigen::Matrix2d> svd(out.A);
  const auto& sv = svd.singularValues();
  out.condition = sv(0) / sv(1);
  if (!(out.condition <= max_condition)) {
    std::ostringstream msg;
    msg << "allocation matrix is ill-conditioned (cond = " << out.condition << ")";
    throw SingularAllocationError(msg.str());
  }
  return out;
}

}  // namespace tecsim
