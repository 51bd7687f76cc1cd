// Physical parameters and shared value types for the everting toroidal robot
// models. Everything is stored in SI units; weights are stored as forces.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace toroid {

/// Raised when an input lies outside the physical domain of a model
/// (negative radius, angle beyond vertical, ...). Maps to CLI exit code 1.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

namespace units {

inline constexpr double kStandardGravity = 9.80665;   // m/s^2
inline constexpr double kKgCmToNm = 0.0980665;         // 1 kg-cm in N*m
inline constexpr double kPi = 3.14159265358979323846;

constexpr double grams_to_newtons(double grams) { return grams * 1e-3 * kStandardGravity; }
constexpr double kg_to_newtons(double kg) { return kg * kStandardGravity; }
constexpr double kg_cm_to_newton_metres(double kg_cm) { return kg_cm * kKgCmToNm; }
constexpr double degrees_to_radians(double deg) { return deg * kPi / 180.0; }
constexpr double radians_to_degrees(double rad) { return rad * 180.0 / kPi; }
constexpr double kpa_to_pa(double kpa) { return kpa * 1e3; }

}  // namespace units

struct MembraneSpec {
    double weight_Wm = 0.0;                // N
    double inflated_outer_diameter = 0.0;  // m
    double eversion_force_Fe = 0.0;        // N, opposes tip motion
    double inversion_force_Fi = 0.0;       // N, opposes tip motion

    friend bool operator==(const MembraneSpec&, const MembraneSpec&) = default;
};

struct DeviceSpec {
    double weight_Wd = 0.0;               // N, without battery
    double battery_weight = 0.0;          // N, added only on request
    double roller_radius_r = 0.0;         // m
    double motor_resistance_R = 0.0;      // ohm
    double torque_constant_Ktau = 0.0;    // N*m/A
    double loss_force_Fl = 0.0;           // N
    double device_outer_diameter = 0.0;   // m

    friend bool operator==(const DeviceSpec&, const DeviceSpec&) = default;
};

struct RobotParams {
    MembraneSpec membrane;
    DeviceSpec device;

    /// Wm + Wd, the combined weight that appears in every balance.
    double total_weight() const { return membrane.weight_Wm + device.weight_Wd; }

    /// Fe + Fi, the tip resistance the device has to overcome.
    double tip_forces() const {
        return membrane.eversion_force_Fe + membrane.inversion_force_Fi;
    }

    /// Fe + Fi + Fl, the only combination that voltage data can calibrate.
    double lumped_losses() const { return tip_forces() + device.loss_force_Fl; }

    /// Copy of these parameters with the battery folded into the device weight.
    RobotParams with_battery() const {
        RobotParams out = *this;
        out.device.weight_Wd += out.device.battery_weight;
        out.device.battery_weight = 0.0;
        return out;
    }

    friend bool operator==(const RobotParams&, const RobotParams&) = default;
};

struct PipeEnvironment {
    double inner_radius_R = 0.0;     // m
    double angle_theta = 0.0;        // rad, [-pi/2, pi/2]
    double contact_length_L = 0.0;   // m
    double mu_static = 0.0;
    double pressure_P = 0.0;         // Pa, gauge
    double burst_pressure = 10e3;    // Pa, soft limit; exceeding it only warns

    friend bool operator==(const PipeEnvironment&, const PipeEnvironment&) = default;
};

/// Checks every invariant of the robot parameters; throws DomainError naming
/// the first one violated.
void validate(const RobotParams& params);
void validate(const PipeEnvironment& env);

/// Validates the pair and hands it back unchanged.
std::pair<RobotParams, PipeEnvironment> validate(const RobotParams& params,
                                                 const PipeEnvironment& env);

/// Throws DomainError("angle out of domain") unless |theta| <= pi/2.
void check_angle(double theta);

/// Contact length when the membrane and pipe overlap only partially.
inline double contact_length(double membrane_length, double pipe_length) {
    return membrane_length < pipe_length ? membrane_length : pipe_length;
}

namespace presets {

/// Robot used for the propulsion and demonstration experiments: 85 g
/// membrane, 360 g device (+214 g battery), 17 mm rollers, 12 V / 1.6 A /
/// 25 kg-cm motors with the rounded R = 7.5 ohm and Ktau = 1.53 N*m/A. Fe, Fi
/// and Fl carry the rough 10/10/40 N split; only their sum is calibrated.
RobotParams reference_robot();

/// Acrylic test pipe (12.4 cm ID, 30.5 cm long) with LDPE-on-acrylic
/// friction 0.192 at 3.45 kPa, held vertical.
PipeEnvironment reference_pipe();

}  // namespace presets

}  // namespace toroid
