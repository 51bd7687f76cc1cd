// Stall-regime motor model linking device force to roller torque, motor
// current and motor voltage. No back-EMF: at incipient motion the current is
// set by the winding resistance alone.
#pragma once

#include "toroid/core_types.hpp"

namespace toroid::actuation {

struct MotorOperatingPoint {
    double voltage_V = 0.0;
    double current_I = 0.0;
    double torque_tau_per_roller = 0.0;  // N*m on each of the two active rollers
};

struct MotorConstants {
    double resistance_R = 0.0;        // ohm
    double torque_constant_Ktau = 0.0;  // N*m/A
};

/// Torque each of the two rollers must supply: r (Fd + Fl) / 2.
double roller_torque(double device_force, double loss_force, double roller_radius);

/// Stall voltage for a given device force: rR/(2 Ktau) (Fd + Fl).
double voltage_for_device_force(const RobotParams& params, double device_force);

/// Stall voltage to climb at theta. Composes the closed-form device force
/// with voltage_for_device_force.
double voltage_for_angle(const RobotParams& params, double theta);

/// Volts per newton of device force, rR/(2 Ktau).
double volts_per_newton(const RobotParams& params);

/// Full operating point (V, I, tau) at stall for a given device force.
MotorOperatingPoint operating_point(const RobotParams& params, double device_force);

/// Backs Fe + Fi + Fl out of the stall voltage measured on level ground.
double calibrate_lumped_losses(double voltage_at_horizontal, double roller_radius,
                               double resistance, double torque_constant);

/// R = V_rated / I_stall and Ktau = tau_stall / I_stall.
MotorConstants motor_constants_from_ratings(double rated_voltage, double stall_current,
                                            double stall_torque);

}  // namespace toroid::actuation
