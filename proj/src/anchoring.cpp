#include "toroid/anchoring.hpp"

#include <cmath>

#include "toroid/statics.hpp"

namespace toroid::anchoring {

namespace {

void require_contact(const PipeEnvironment& env, const RobotParams& params) {
    if (!(params.membrane.inflated_outer_diameter > 2.0 * env.inner_radius_R)) {
        throw DomainError("membrane does not press against pipe");
    }
}

}  // namespace

double friction_per_pascal(const PipeEnvironment& env) {
    return env.mu_static * 2.0 * units::kPi * env.inner_radius_R * env.contact_length_L;
}

double available_friction(const PipeEnvironment& env, const RobotParams& params) {
    validate(env);
    require_contact(env, params);
    const double normal = env.pressure_P * (2.0 * units::kPi * env.inner_radius_R * env.contact_length_L) +
                          params.total_weight() * std::cos(env.angle_theta);
    return env.mu_static * normal;
}

double max_vertical_weight(const PipeEnvironment& env) {
    PipeEnvironment vertical = env;
    vertical.angle_theta = units::kPi / 2.0;
    validate(vertical);
    return friction_per_pascal(env) * env.pressure_P;
}

double min_pressure_for_no_slip(double total_weight, const PipeEnvironment& env) {
    if (total_weight < 0.0) throw DomainError("total_weight must be nonnegative");
    const double per_pascal = friction_per_pascal(env);
    if (!(per_pascal > 0.0)) {
        throw DomainError("mu_static * R * L must be positive to anchor by pressure");
    }
    return total_weight / per_pascal;
}

SlipAssessment assess_slip(const RobotParams& params, const PipeEnvironment& env) {
    SlipAssessment out;
    out.available_friction = available_friction(env, params);
    out.required_friction_Fp = statics::solve_climb_forces(params, env.angle_theta).pipe_friction_Fp;
    out.margin = out.available_friction - std::abs(out.required_friction_Fp);
    out.slips = out.margin < 0.0;
    return out;
}

bool exceeds_burst_limit(const PipeEnvironment& env) {
    return env.pressure_P > env.burst_pressure;
}

}  // namespace toroid::anchoring
