#include "toroid/statics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace toroid::statics {

double Residuals::max_abs() const {
    return std::max({std::abs(membrane), std::abs(tension), std::abs(device)});
}

ForceSolution solve_climb_forces(const RobotParams& params, double theta) {
    check_angle(theta);
    const double s = std::sin(theta);
    const double Wm = params.membrane.weight_Wm;
    const double Wd = params.device.weight_Wd;
    const double tip = params.tip_forces();

    ForceSolution out;
    out.device_force_Fd = tip + (Wm + Wd) * s;
    out.grounding_force_Fg = tip + (Wm + 2.0 * Wd) * s;
    out.pipe_friction_Fp = (Wm + Wd) * s;
    out.device_at_everting_end = out.grounding_force_Fg < 0.0;
    return out;
}

Residuals balance_residuals(const RobotParams& params, double theta, const ForceSolution& f) {
    const double s = std::sin(theta);
    const double Wm = params.membrane.weight_Wm;
    const double Wd = params.device.weight_Wd;
    const double Fd = f.device_force_Fd;
    const double Fg = f.grounding_force_Fg;
    const double Fp = f.pipe_friction_Fp;
    return {
        Fp + Fd - Wm * s - Fg,
        params.tip_forces() + Fp - Fd,
        Fg - Fd - Wd * s,
    };
}

ForceSolution oracle_solve(const RobotParams& params, double theta) {
    check_angle(theta);
    const double s = std::sin(theta);
    const double Wm = params.membrane.weight_Wm;
    const double Wd = params.device.weight_Wd;

    // Unknown vector x = [Fd, Fg, Fp].
    Eigen::Matrix3d A;
    A << 1.0, -1.0, 1.0,
        -1.0, 0.0, 1.0,
        -1.0, 1.0, 0.0;
    const Eigen::Vector3d b(Wm * s, -params.tip_forces(), Wd * s);

    const Eigen::FullPivLU<Eigen::Matrix3d> lu(A);
    if (!lu.isInvertible()) {
        throw std::runtime_error("balance system is singular");
    }
    const Eigen::Vector3d x = lu.solve(b);

    ForceSolution out;
    out.device_force_Fd = x(0);
    out.grounding_force_Fg = x(1);
    out.pipe_friction_Fp = x(2);
    out.device_at_everting_end = x(1) < 0.0;
    return out;
}

}  // namespace toroid::statics
