// Friction anchoring of the inflated membrane against a pipe wall.
//
// Normal force comes from the internal pressure over the contact patch
// (P * 2 pi R L) plus the part of the robot weight pressing on the wall;
// static friction scales it by mu_s.
#pragma once

#include "toroid/core_types.hpp"

namespace toroid::anchoring {

struct SlipAssessment {
    double required_friction_Fp = 0.0;  // signed, from the force balance
    double available_friction = 0.0;
    double margin = 0.0;                // available - |required|
    bool slips = false;                 // margin < 0; a tie still holds
};

/// mu_s * 2 pi R L, the anchoring force per pascal of internal pressure.
double friction_per_pascal(const PipeEnvironment& env);

/// Friction the contact can supply at the environment's pressure and angle.
/// Throws DomainError if the membrane does not press against the pipe.
double available_friction(const PipeEnvironment& env, const RobotParams& params);

/// Heaviest robot a vertical pipe can hold at the environment's pressure.
/// The angle in env is ignored.
double max_vertical_weight(const PipeEnvironment& env);

/// Lowest pressure at which a vertical pipe holds total_weight.
double min_pressure_for_no_slip(double total_weight, const PipeEnvironment& env);

SlipAssessment assess_slip(const RobotParams& params, const PipeEnvironment& env);

/// True when the environment's pressure exceeds its burst soft limit.
bool exceeds_burst_limit(const PipeEnvironment& env);

}  // namespace toroid::anchoring
