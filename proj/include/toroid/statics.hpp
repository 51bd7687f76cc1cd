// Quasistatic force balance of the robot climbing a pipe inclined at theta.
//
// Unknowns: device force Fd (active rollers on the membrane tail), grounding
// force Fg (device against the inverting end) and pipe friction Fp (signed).
// Balances along the direction of motion:
//
//   membrane:        Fp + Fd - Wm sin(theta) - Fg = 0
//   membrane tension: Fe + Fi + Fp - Fd = 0
//   device:          Fg - Fd - Wd sin(theta) = 0
#pragma once

#include <array>

#include "toroid/core_types.hpp"

namespace toroid::statics {

/// Balance residuals are expected to vanish to this tolerance (N).
inline constexpr double kResidualTolerance = 1e-9;

struct ForceSolution {
    double device_force_Fd = 0.0;
    double grounding_force_Fg = 0.0;
    double pipe_friction_Fp = 0.0;  // negative: acts against the drawn direction
    /// Set when the closed-form Fg is negative: the device cannot push on the
    /// inverting end and instead drives itself to the everting (lower) end.
    bool device_at_everting_end = false;
};

/// Residuals of the three balance equations, in the order listed above.
struct Residuals {
    double membrane = 0.0;
    double tension = 0.0;
    double device = 0.0;

    double max_abs() const;
};

/// Closed-form solution of the balance system.
ForceSolution solve_climb_forces(const RobotParams& params, double theta);

Residuals balance_residuals(const RobotParams& params, double theta, const ForceSolution& forces);

/// Independent route: assembles the 3x3 system and hands it to a generic
/// dense LU solve. Used to cross-check solve_climb_forces.
ForceSolution oracle_solve(const RobotParams& params, double theta);

}  // namespace toroid::statics
