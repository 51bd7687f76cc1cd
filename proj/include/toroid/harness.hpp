// Parameter sweeps that regenerate the voltage-vs-angle and slip-load-vs-
// pressure validation curves, with CSV and plain-text renderings.
#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "toroid/core_types.hpp"

namespace toroid::harness {

struct Constant {
    std::string name;
    double value = 0.0;
    std::string unit;

    friend bool operator==(const Constant&, const Constant&) = default;
};

struct SweepReport {
    std::string sweep_variable;        // e.g. "theta"
    std::string sweep_units;           // e.g. "deg"
    std::vector<std::string> columns;  // first column is the sweep variable
    std::vector<std::vector<double>> samples;
    std::vector<Constant> model_constants;
    std::vector<std::string> notes;

    /// Values of one column, by header name. Throws std::out_of_range.
    std::vector<double> column(std::string_view name) const;

    friend bool operator==(const SweepReport&, const SweepReport&) = default;
};

/// Sample angles lo, lo + step, ... up to hi (inclusive, within 1e-9 deg).
/// A step wider than the range yields the single sample lo.
std::vector<double> angle_grid(double lo_deg, double hi_deg, double step_deg);

/// Columns theta_deg, Fd_N, Fg_N, Fp_N, V_volts. The notes carry the check of
/// the weight term's units against the reference voltage curve.
SweepReport angle_sweep(const RobotParams& params, double lo_deg, double hi_deg, double step_deg);

/// The five test pressures, evenly spaced from 0.70 kPa to 3.45 kPa.
std::vector<double> default_slip_pressures();

/// Columns P_Pa, W_total_N, load_N, where load is what the pipe holds beyond
/// the membrane's own weight.
SweepReport pressure_sweep(const PipeEnvironment& env, std::span<const double> pressures,
                           double membrane_weight = units::grams_to_newtons(85.0));

/// Replaces Fl so that Fe + Fi + Fl reproduces the given level-ground stall
/// voltage. Throws DomainError if that needs a negative Fl.
RobotParams calibrated_to_voltage(const RobotParams& params, double voltage_at_horizontal);

/// Least-squares line through (x, y); used to check that sweeps are affine.
struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};
LineFit fit_line(std::span<const double> x, std::span<const double> y);

/// Measured points in the report's CSV schema; only the sweep column and the
/// compared column need to be present.
struct Residual {
    double input = 0.0;
    double measured = 0.0;
    double model = 0.0;
    double residual = 0.0;  // measured - model
};

std::vector<Residual> angle_residuals(const RobotParams& params, std::string_view measured_csv);
std::vector<Residual> pressure_residuals(const PipeEnvironment& env, std::string_view measured_csv);

/// Appends a residual summary (count, mean, RMS) to the report notes.
void attach_residuals(SweepReport& report, std::span<const Residual> residuals, std::string_view column);

/// Header row then one row per sample, LF endings, 6 significant digits.
std::string to_csv(const SweepReport& report);

/// Human-readable summary: constants, table and notes.
std::string to_text(const SweepReport& report);

/// Fixed scientific notation with 6 significant digits.
std::string format_number(double value);

}  // namespace toroid::harness
