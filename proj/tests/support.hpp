// Shared helpers for the unit and acceptance tests.
#pragma once

#include <random>
#include <string>

#include "toroid/core_types.hpp"

namespace toroid::testing {

inline std::string config_path(const std::string& name) { return std::string(TOROID_CONFIG_DIR) + "/" + name; }

/// Random robot over the ranges used by the oracle checks: weights in
/// [0, 100] N, Fe and Fi in [0, 50] N.
inline RobotParams random_robot(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> weight(0.0, 100.0);
    std::uniform_real_distribution<double> tip(0.0, 50.0);
    RobotParams p = presets::reference_robot();
    p.membrane.weight_Wm = weight(rng);
    p.device.weight_Wd = weight(rng);
    p.membrane.eversion_force_Fe = tip(rng);
    p.membrane.inversion_force_Fi = tip(rng);
    if (p.total_weight() <= 0.0) p.device.weight_Wd = 1.0;
    return p;
}

inline double random_angle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> deg(-90.0, 90.0);
    return units::degrees_to_radians(deg(rng));
}

}  // namespace toroid::testing
