#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "mgrrt/errors.hpp"

namespace mgrrt {

/**
 * @brief Quadrotor parameters feeding the turning-capability derivation.
 *
 * Defaults describe a 1.5 kg quadrotor cruising at 8 m/s. Only
 * thrust_coeff * max_motor_speed^2 is ever consumed, so the motor speed
 * unit does not matter beyond that product.
 */
struct UavParams {
  double mass = 1.50;              // kg
  double gravity = 9.81;           // m/s^2
  double forward_speed = 8.0;      // m/s, constant cruise speed v_x
  double thrust_coeff = 2.9e-5;    // N per (rad/s)^2
  double friction_coeff = 1.1e-6;  // N s/m, linear drag
  double max_motor_speed = 1000.0; // propeller speed bound
  double uav_radius = 0.3;         // m, used to inflate obstacles

  /// @throws InvalidScenario if any field is non-positive or the maximum
  /// thrust cannot exceed the hover requirement (no turning authority).
  void validate() const {
    const auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (!positive(mass)) throw InvalidScenario("uav.mass must be > 0");
    if (!positive(gravity)) throw InvalidScenario("uav.gravity must be > 0");
    if (!positive(forward_speed)) throw InvalidScenario("uav.forward_speed must be > 0");
    if (!positive(thrust_coeff)) throw InvalidScenario("uav.thrust_coeff must be > 0");
    if (!positive(friction_coeff)) throw InvalidScenario("uav.friction_coeff must be > 0");
    if (!positive(max_motor_speed)) throw InvalidScenario("uav.max_motor_speed must be > 0");
    if (!positive(uav_radius)) throw InvalidScenario("uav.uav_radius must be > 0");
    const double f_max = 4.0 * thrust_coeff * max_motor_speed * max_motor_speed;
    const double hover_sq = friction_coeff * friction_coeff * forward_speed * forward_speed +
                            mass * mass * gravity * gravity;
    if (f_max * f_max <= hover_sq) {
      throw InvalidScenario("uav: max thrust cannot exceed drag + weight; no turning authority");
    }
  }
};

/// Roll / pitch / yaw, radians.
struct AttitudeState {
  double roll = 0.0;
  double pitch = 0.0;
  double yaw = 0.0;
};

/**
 * @brief Thrust of one propeller at rotational speed omega: c_t * omega^2.
 * @throws OutOfRange if omega is outside [0, max_motor_speed].
 */
inline double propeller_thrust(const UavParams& p, double omega) {
  if (!(omega >= 0.0 && omega <= p.max_motor_speed)) {
    throw OutOfRange("propeller_thrust: motor speed outside [0, max_motor_speed]");
  }
  return p.thrust_coeff * omega * omega;
}

/// Total thrust with all four motors saturated: 4 * c_t * omega_max^2.
inline double max_total_thrust(const UavParams& p) {
  return 4.0 * p.thrust_coeff * p.max_motor_speed * p.max_motor_speed;
}

/// Body-to-inertial rotation R_z(yaw) * R_y(pitch) * R_x(roll).
inline Eigen::Matrix3d rotation_matrix(const AttitudeState& att) {
  const Eigen::Matrix3d rz =
      Eigen::AngleAxisd(att.yaw, Eigen::Vector3d::UnitZ()).toRotationMatrix();
  const Eigen::Matrix3d ry =
      Eigen::AngleAxisd(att.pitch, Eigen::Vector3d::UnitY()).toRotationMatrix();
  const Eigen::Matrix3d rx =
      Eigen::AngleAxisd(att.roll, Eigen::Vector3d::UnitX()).toRotationMatrix();
  return rz * ry * rx;
}

/**
 * @brief Linear acceleration under thrust, linear drag, and gravity.
 *
 * (1/m) * (R * [0,0,f_T]^T - c_f * velocity - [0,0,m g]^T), inertial frame.
 */
inline Eigen::Vector3d linear_acceleration(const UavParams& p, const AttitudeState& att,
                                           double total_thrust, const Eigen::Vector3d& velocity) {
  if (total_thrust < 0.0) throw OutOfRange("linear_acceleration: thrust must be >= 0");
  const Eigen::Vector3d thrust_body(0.0, 0.0, total_thrust);
  const Eigen::Vector3d weight(0.0, 0.0, p.mass * p.gravity);
  return (rotation_matrix(att) * thrust_body - p.friction_coeff * velocity - weight) / p.mass;
}

/// Steady-cruise pitch angle: atan(c_f * v_x / (m * g)), in (0, pi/2).
inline double pitch_angle(const UavParams& p) {
  return std::atan(p.friction_coeff * p.forward_speed / (p.mass * p.gravity));
}

namespace detail {

/// f_T^2 - c_f^2 v_x^2 - m^2 g^2, the squared lateral force budget of a
/// banked turn at constant speed and altitude.
inline double turn_budget_sq(const UavParams& p, double total_thrust) {
  const double drag = p.friction_coeff * p.forward_speed;
  const double weight = p.mass * p.gravity;
  return total_thrust * total_thrust - drag * drag - weight * weight;
}

}  // namespace detail

/**
 * @brief Turning radius at thrust f_T: m v_x^2 / sqrt(f_T^2 - c_f^2 v_x^2 - m^2 g^2).
 *
 * Derived from force balance in a coordinated fixed-altitude turn: the
 * vertical thrust component carries the weight, the along-track component
 * cancels drag, and the remainder supplies the centripetal force.
 *
 * @throws InsufficientThrust unless f_T^2 strictly exceeds the hover budget.
 */
inline double turning_radius(const UavParams& p, double total_thrust) {
  const double budget = detail::turn_budget_sq(p, total_thrust);
  if (budget <= 0.0) {
    throw InsufficientThrust("turning_radius: thrust does not exceed drag + weight");
  }
  return p.mass * p.forward_speed * p.forward_speed / std::sqrt(budget);
}

/**
 * @brief Maximum turning capability sqrt(f_Tmax^2 - c_f^2 v_x^2 - m^2 g^2) / (m v_x^2).
 *
 * Dimensionally the reciprocal of the minimum turning radius (1/m). The
 * planner consumes a configured angle bound instead (see PlannerConfig);
 * this value is exposed for reporting, with an optional reading of the
 * raw number as radians.
 *
 * Returns 0 exactly at the hover limit (no turning authority).
 * @throws InsufficientThrust if maximum thrust is below the hover limit.
 */
inline double gamma_max(const UavParams& p) {
  const double budget = detail::turn_budget_sq(p, max_total_thrust(p));
  if (budget < 0.0) {
    throw InsufficientThrust("gamma_max: max thrust below drag + weight");
  }
  return std::sqrt(budget) / (p.mass * p.forward_speed * p.forward_speed);
}

inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / std::numbers::pi; }

}  // namespace mgrrt
