#include "toroid/actuation.hpp"

#include "toroid/statics.hpp"

namespace toroid::actuation {

double roller_torque(double device_force, double loss_force, double roller_radius) {
    if (!(roller_radius > 0.0)) throw DomainError("roller_radius_r must be positive");
    return roller_radius * (device_force + loss_force) / 2.0;
}

double volts_per_newton(const RobotParams& params) {
    const auto& d = params.device;
    return d.roller_radius_r * d.motor_resistance_R / (2.0 * d.torque_constant_Ktau);
}

double voltage_for_device_force(const RobotParams& params, double device_force) {
    return volts_per_newton(params) * (device_force + params.device.loss_force_Fl);
}

double voltage_for_angle(const RobotParams& params, double theta) {
    return voltage_for_device_force(params, statics::solve_climb_forces(params, theta).device_force_Fd);
}

MotorOperatingPoint operating_point(const RobotParams& params, double device_force) {
    MotorOperatingPoint op;
    op.voltage_V = voltage_for_device_force(params, device_force);
    op.current_I = op.voltage_V / params.device.motor_resistance_R;
    op.torque_tau_per_roller = params.device.torque_constant_Ktau * op.current_I;
    return op;
}

double calibrate_lumped_losses(double voltage_at_horizontal, double roller_radius,
                               double resistance, double torque_constant) {
    if (!(roller_radius > 0.0) || !(resistance > 0.0) || !(torque_constant > 0.0)) {
        throw DomainError("roller radius, resistance and torque constant must be positive");
    }
    if (voltage_at_horizontal < 0.0) throw DomainError("voltage must be nonnegative");
    return 2.0 * torque_constant * voltage_at_horizontal / (roller_radius * resistance);
}

MotorConstants motor_constants_from_ratings(double rated_voltage, double stall_current,
                                            double stall_torque) {
    if (!(rated_voltage > 0.0) || !(stall_current > 0.0) || !(stall_torque > 0.0)) {
        throw DomainError("motor ratings must be positive");
    }
    return {rated_voltage / stall_current, stall_torque / stall_current};
}

}  // namespace toroid::actuation
