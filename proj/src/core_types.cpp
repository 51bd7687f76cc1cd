#include "toroid/core_types.hpp"

#include <cmath>

namespace toroid {

namespace {

void require(bool ok, const char* message) {
    if (!ok) throw DomainError(message);
}

}  // namespace

void check_angle(double theta) {
    // Slack of a few ulps so that 90 degrees converted to radians is accepted.
    require(std::isfinite(theta) && std::abs(theta) <= units::kPi / 2.0 + 1e-12,
            "angle out of domain");
}

void validate(const RobotParams& params) {
    const auto& m = params.membrane;
    const auto& d = params.device;
    require(m.weight_Wm >= 0.0, "weight_Wm must be nonnegative");
    require(m.inflated_outer_diameter > 0.0, "inflated_outer_diameter must be positive");
    require(m.eversion_force_Fe >= 0.0, "eversion_force_Fe must be nonnegative");
    require(m.inversion_force_Fi >= 0.0, "inversion_force_Fi must be nonnegative");
    require(d.weight_Wd >= 0.0, "weight_Wd must be nonnegative");
    require(d.battery_weight >= 0.0, "battery_weight must be nonnegative");
    require(d.roller_radius_r > 0.0, "roller_radius_r must be positive");
    require(d.motor_resistance_R > 0.0, "motor_resistance_R must be positive");
    require(d.torque_constant_Ktau > 0.0, "torque_constant_Ktau must be positive");
    require(d.loss_force_Fl >= 0.0, "loss_force_Fl must be nonnegative");
    require(d.device_outer_diameter >= 0.0, "device_outer_diameter must be nonnegative");
    require(params.total_weight() > 0.0, "total_weight must be positive");
}

void validate(const PipeEnvironment& env) {
    require(env.inner_radius_R > 0.0, "inner_radius_R must be positive");
    check_angle(env.angle_theta);
    require(env.contact_length_L >= 0.0, "contact_length_L must be nonnegative");
    require(env.mu_static >= 0.0, "mu_static must be nonnegative");
    require(env.pressure_P >= 0.0, "pressure_P must be nonnegative");
    require(env.burst_pressure > 0.0, "burst_pressure must be positive");
}

std::pair<RobotParams, PipeEnvironment> validate(const RobotParams& params,
                                                 const PipeEnvironment& env) {
    validate(params);
    validate(env);
    return {params, env};
}

namespace presets {

RobotParams reference_robot() {
    RobotParams p;
    p.membrane.weight_Wm = units::grams_to_newtons(85.0);
    p.membrane.inflated_outer_diameter = 0.137;
    p.membrane.eversion_force_Fe = 10.0;
    p.membrane.inversion_force_Fi = 10.0;
    p.device.weight_Wd = units::grams_to_newtons(360.0);
    p.device.battery_weight = units::grams_to_newtons(574.0 - 360.0);
    p.device.roller_radius_r = 0.017;
    p.device.motor_resistance_R = 7.5;
    p.device.torque_constant_Ktau = 1.53;
    p.device.loss_force_Fl = 40.0;
    p.device.device_outer_diameter = 0.104;
    return p;
}

PipeEnvironment reference_pipe() {
    PipeEnvironment env;
    env.inner_radius_R = 0.124 / 2.0;
    env.angle_theta = units::kPi / 2.0;
    env.contact_length_L = 0.305;
    env.mu_static = 0.192;
    env.pressure_P = 3450.0;
    return env;
}

}  // namespace presets

}  // namespace toroid
