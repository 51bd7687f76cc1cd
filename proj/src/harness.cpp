#include "toroid/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "toroid/actuation.hpp"
#include "toroid/anchoring.hpp"
#include "toroid/statics.hpp"

namespace toroid::harness {

namespace {

// Span of the reference voltage curve, volts at -90 and +90 degrees.
constexpr double kReferenceCurveLow = 2.41;
constexpr double kReferenceCurveHigh = 2.45;

std::vector<Constant> robot_constants(const RobotParams& p) {
    return {
        {"weight_Wm", p.membrane.weight_Wm, "N"},
        {"weight_Wd", p.device.weight_Wd, "N"},
        {"eversion_force_Fe", p.membrane.eversion_force_Fe, "N"},
        {"inversion_force_Fi", p.membrane.inversion_force_Fi, "N"},
        {"loss_force_Fl", p.device.loss_force_Fl, "N"},
        {"roller_radius_r", p.device.roller_radius_r, "m"},
        {"motor_resistance_R", p.device.motor_resistance_R, "ohm"},
        {"torque_constant_Ktau", p.device.torque_constant_Ktau, "N*m/A"},
    };
}

std::vector<Constant> pipe_constants(const PipeEnvironment& env) {
    return {
        {"inner_radius_R", env.inner_radius_R, "m"},
        {"contact_length_L", env.contact_length_L, "m"},
        {"mu_static", env.mu_static, "1"},
        {"burst_pressure", env.burst_pressure, "Pa"},
    };
}

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = line.find(sep, start);
        std::string field(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        field.erase(0, field.find_first_not_of(" \t"));
        field.erase(field.find_last_not_of(" \t\r") + 1);
        out.push_back(std::move(field));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

// (input, value) pairs from a CSV with a header row.
std::vector<std::pair<double, double>> read_pairs(std::string_view csv, std::string_view input_column,
                                                  std::string_view value_column) {
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("measured data: missing header row");
    const auto header = split(line, ',');
    const auto index_of = [&](std::string_view name) {
        const auto it = std::find(header.begin(), header.end(), name);
        if (it == header.end()) {
            throw std::invalid_argument("measured data: missing column " + std::string(name));
        }
        return static_cast<std::size_t>(it - header.begin());
    };
    const std::size_t xi = index_of(input_column);
    const std::size_t yi = index_of(value_column);

    std::vector<std::pair<double, double>> out;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split(line, ',');
        if (fields.size() != header.size()) {
            throw std::invalid_argument("measured data: wrong field count on line " + std::to_string(line_no));
        }
        try {
            out.emplace_back(std::stod(fields[xi]), std::stod(fields[yi]));
        } catch (const std::logic_error&) {
            throw std::invalid_argument("measured data: bad number on line " + std::to_string(line_no));
        }
    }
    return out;
}

}  // namespace

std::vector<double> SweepReport::column(std::string_view name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) throw std::out_of_range("no column " + std::string(name));
    const auto idx = static_cast<std::size_t>(it - columns.begin());
    std::vector<double> out;
    out.reserve(samples.size());
    for (const auto& row : samples) out.push_back(row[idx]);
    return out;
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.5e", value);
    return buf;
}

std::vector<double> angle_grid(double lo_deg, double hi_deg, double step_deg) {
    if (!(step_deg > 0.0)) throw DomainError("sweep step must be positive");
    if (lo_deg > hi_deg) throw DomainError("sweep range is empty");
    if (lo_deg < -90.0 || hi_deg > 90.0) throw DomainError("angle out of domain");
    std::vector<double> out;
    for (std::size_t k = 0;; ++k) {
        const double theta = lo_deg + static_cast<double>(k) * step_deg;
        if (theta > hi_deg + 1e-9) break;
        out.push_back(std::min(theta, hi_deg));
    }
    return out;
}

SweepReport angle_sweep(const RobotParams& params, double lo_deg, double hi_deg, double step_deg) {
    validate(params);
    SweepReport report;
    report.sweep_variable = "theta";
    report.sweep_units = "deg";
    report.columns = {"theta_deg", "Fd_N", "Fg_N", "Fp_N", "V_volts"};
    report.model_constants = robot_constants(params);

    for (const double deg : angle_grid(lo_deg, hi_deg, step_deg)) {
        const double theta = units::degrees_to_radians(deg);
        const auto f = statics::solve_climb_forces(params, theta);
        report.samples.push_back({deg, f.device_force_Fd, f.grounding_force_Fg, f.pipe_friction_Fp,
                                  actuation::voltage_for_angle(params, theta)});
        if (f.device_at_everting_end) {
            report.notes.push_back("theta " + format_number(deg) +
                                   " deg: grounding force negative, device rests on the everting end");
        }
    }

    // The reference curve's span is reproduced only if the weight term is
    // entered in kilograms; report both so the mismatch is visible.
    const double k = actuation::volts_per_newton(params);
    const double level = k * params.lumped_losses();
    const double weight_term = k * params.total_weight();
    const double kg_term = weight_term / units::kStandardGravity;
    char buf[512];
    std::snprintf(buf, sizeof buf,
                  "unit discrepancy: the reference voltage curve spans %.2f V at -90 deg to %.2f V at +90 deg. "
                  "With the weight term in newtons (SI) this model spans %.4f V to %.4f V "
                  "(V(+90) - V(-90) = %.4f V). Entering Wm + Wd in kilograms instead gives %.4f V to %.4f V, "
                  "which matches the reference span; the SI values are reported here.",
                  kReferenceCurveLow, kReferenceCurveHigh, level - weight_term, level + weight_term,
                  2.0 * weight_term, level - kg_term, level + kg_term);
    report.notes.emplace_back(buf);
    return report;
}

std::vector<double> default_slip_pressures() {
    constexpr double lo = 700.0;
    constexpr double hi = 3450.0;
    std::vector<double> out;
    for (int i = 0; i < 5; ++i) out.push_back(lo + (hi - lo) * i / 4.0);
    return out;
}

SweepReport pressure_sweep(const PipeEnvironment& env, std::span<const double> pressures,
                           double membrane_weight) {
    for (std::size_t i = 0; i < pressures.size(); ++i) {
        if (pressures[i] < 0.0) throw DomainError("pressures must be nonnegative");
        if (i > 0 && !(pressures[i] > pressures[i - 1])) {
            throw DomainError("pressures must be strictly increasing");
        }
    }
    SweepReport report;
    report.sweep_variable = "P";
    report.sweep_units = "Pa";
    report.columns = {"P_Pa", "W_total_N", "load_N"};
    report.model_constants = pipe_constants(env);
    report.model_constants.push_back({"membrane_weight", membrane_weight, "N"});

    for (const double p : pressures) {
        PipeEnvironment at = env;
        at.pressure_P = p;
        const double total = anchoring::max_vertical_weight(at);
        report.samples.push_back({p, total, total - membrane_weight});
        if (anchoring::exceeds_burst_limit(at)) {
            report.notes.push_back("pressure " + format_number(p) + " Pa exceeds the membrane burst limit " +
                                   format_number(env.burst_pressure) + " Pa");
        }
    }
    report.notes.push_back("slope mu_s * 2 pi R L = " + format_number(anchoring::friction_per_pascal(env)) +
                           " N/Pa");
    return report;
}

RobotParams calibrated_to_voltage(const RobotParams& params, double voltage_at_horizontal) {
    const auto& d = params.device;
    const double lumped = actuation::calibrate_lumped_losses(voltage_at_horizontal, d.roller_radius_r,
                                                             d.motor_resistance_R, d.torque_constant_Ktau);
    const double loss = lumped - params.tip_forces();
    if (loss < 0.0) throw DomainError("calibrated Fe + Fi + Fl is below Fe + Fi");
    RobotParams out = params;
    out.device.loss_force_Fl = loss;
    return out;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("fit_line needs two or more points");
    const double n = static_cast<double>(x.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= n;
    my /= n;
    double sxy = 0.0;
    double sxx = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    if (sxx == 0.0) throw std::invalid_argument("fit_line needs distinct x values");
    const double slope = sxy / sxx;
    return {slope, my - slope * mx};
}

std::vector<Residual> angle_residuals(const RobotParams& params, std::string_view measured_csv) {
    std::vector<Residual> out;
    for (const auto& [deg, volts] : read_pairs(measured_csv, "theta_deg", "V_volts")) {
        const double model = actuation::voltage_for_angle(params, units::degrees_to_radians(deg));
        out.push_back({deg, volts, model, volts - model});
    }
    return out;
}

std::vector<Residual> pressure_residuals(const PipeEnvironment& env, std::string_view measured_csv) {
    std::vector<Residual> out;
    for (const auto& [p, weight] : read_pairs(measured_csv, "P_Pa", "W_total_N")) {
        PipeEnvironment at = env;
        at.pressure_P = p;
        const double model = anchoring::max_vertical_weight(at);
        out.push_back({p, weight, model, weight - model});
    }
    return out;
}

void attach_residuals(SweepReport& report, std::span<const Residual> residuals, std::string_view column) {
    if (residuals.empty()) {
        report.notes.push_back("measured overlay: no points");
        return;
    }
    double sum = 0.0;
    double sq = 0.0;
    for (const auto& r : residuals) {
        sum += r.residual;
        sq += r.residual * r.residual;
    }
    const double n = static_cast<double>(residuals.size());
    report.notes.push_back("measured overlay on " + std::string(column) + ": " + std::to_string(residuals.size()) +
                           " points, mean residual " + format_number(sum / n) + ", RMS " +
                           format_number(std::sqrt(sq / n)));
}

std::string to_csv(const SweepReport& report) {
    std::string out;
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
        if (i) out += ',';
        out += report.columns[i];
    }
    out += '\n';
    for (const auto& row : report.samples) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_text(const SweepReport& report) {
    std::string out = "sweep over " + report.sweep_variable + " [" + report.sweep_units + "], " +
                      std::to_string(report.samples.size()) + " samples\n";
    out += "model constants:\n";
    for (const auto& c : report.model_constants) {
        out += "  " + c.name + " = " + format_number(c.value) + " " + c.unit + "\n";
    }
    out += "\n" + to_csv(report);
    if (!report.notes.empty()) {
        out += "\nnotes:\n";
        for (const auto& n : report.notes) out += "  - " + n + "\n";
    }
    return out;
}

}  // namespace toroid::harness
