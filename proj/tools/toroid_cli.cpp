// toroid: statics, motor voltage, anchoring and planar locomotion from the
// command line.
//
// Exit status: 0 on success, 1 on a domain error, 2 on I/O, parse or usage
// errors.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "toroid/actuation.hpp"
#include "toroid/anchoring.hpp"
#include "toroid/config.hpp"
#include "toroid/harness.hpp"
#include "toroid/locomotion_sim.hpp"
#include "toroid/statics.hpp"

namespace {

using namespace toroid;
using harness::format_number;

constexpr int kExitDomain = 1;
constexpr int kExitInput = 2;

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

config::ConfigDocument load(const std::string& path) {
    return path.empty() ? config::ConfigDocument{} : config::load_config(path);
}

RobotParams robot_from(const config::ConfigDocument& doc, const std::string& path) {
    if (doc.robot) return *doc.robot;
    if (!path.empty()) throw InputError(path + ": no robot section");
    return presets::reference_robot();
}

PipeEnvironment environment_from(const config::ConfigDocument& doc, const std::string& path) {
    if (doc.environment) return *doc.environment;
    if (!path.empty()) throw InputError(path + ": no environment section");
    return presets::reference_pipe();
}

void line(const std::string& name, double value, const std::string& unit) {
    std::cout << name << " = " << format_number(value) << ' ' << unit << '\n';
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        config::write_file(out_path, text);
    }
}

std::string render(const harness::SweepReport& report, const std::string& format) {
    return format == "text" ? harness::to_text(report) : harness::to_csv(report);
}

struct Options {
    std::string config;
    double angle_deg = 0.0;
    std::optional<double> angle_opt;
    std::optional<double> pressure_kpa;
    bool with_battery = false;
    bool sweep = false;
    double from = -90.0;
    double to = 90.0;
    double step = 10.0;
    std::optional<double> v0;
    std::string out;
    std::string format = "csv";
    std::string measured;
    std::string scenario;
    std::optional<double> dt;
    double voltage = 0.0;
};

int cmd_solve(const Options& o) {
    const auto doc = load(o.config);
    const RobotParams p = robot_from(doc, o.config);
    const double theta = units::degrees_to_radians(o.angle_deg);
    const auto f = statics::solve_climb_forces(p, theta);
    line("theta", o.angle_deg, "deg");
    line("Fd", f.device_force_Fd, "N");
    line("Fg", f.grounding_force_Fg, "N");
    line("Fp", f.pipe_friction_Fp, "N");
    line("V", actuation::voltage_for_angle(p, theta), "V");
    if (f.device_at_everting_end) std::cout << "note: grounding force negative, device rests on the everting end\n";
    return 0;
}

int cmd_sweep_angle(const Options& o) {
    const auto doc = load(o.config);
    RobotParams p = robot_from(doc, o.config);
    if (o.v0) p = harness::calibrated_to_voltage(p, *o.v0);
    auto report = harness::angle_sweep(p, o.from, o.to, o.step);
    if (!o.measured.empty()) {
        const auto residuals = harness::angle_residuals(p, config::read_file(o.measured));
        harness::attach_residuals(report, residuals, "V_volts");
    }
    emit(render(report, o.format), o.out);
    if (!o.out.empty()) {
        for (const auto& n : report.notes) std::cerr << "note: " << n << '\n';
    }
    return 0;
}

int cmd_slip(const Options& o) {
    const auto doc = load(o.config);
    RobotParams p = robot_from(doc, o.config);
    PipeEnvironment env = environment_from(doc, o.config);
    if (o.with_battery) p = p.with_battery();
    if (o.angle_opt) env.angle_theta = units::degrees_to_radians(*o.angle_opt);
    if (o.pressure_kpa) env.pressure_P = units::kpa_to_pa(*o.pressure_kpa);

    if (o.sweep) {
        validate(env);
        const auto pressures = harness::default_slip_pressures();
        auto report = harness::pressure_sweep(env, pressures, p.membrane.weight_Wm);
        if (!o.measured.empty()) {
            const auto residuals = harness::pressure_residuals(env, config::read_file(o.measured));
            harness::attach_residuals(report, residuals, "W_total_N");
        }
        emit(render(report, o.format), o.out);
        return 0;
    }

    const auto s = anchoring::assess_slip(p, env);
    line("theta", units::radians_to_degrees(env.angle_theta), "deg");
    line("P", env.pressure_P, "Pa");
    line("required_Fp", s.required_friction_Fp, "N");
    line("available_friction", s.available_friction, "N");
    line("margin", s.margin, "N");
    std::cout << "slips = " << (s.slips ? "true" : "false") << '\n';
    if (anchoring::exceeds_burst_limit(env)) {
        std::cout << "warning: pressure exceeds the burst limit " << format_number(env.burst_pressure) << " Pa\n";
    }
    return 0;
}

int cmd_min_pressure(const Options& o) {
    const auto doc = load(o.config);
    RobotParams p = robot_from(doc, o.config);
    const PipeEnvironment env = environment_from(doc, o.config);
    if (o.with_battery) p = p.with_battery();
    validate(p);
    line("total_weight", p.total_weight(), "N");
    line("min_pressure", anchoring::min_pressure_for_no_slip(p.total_weight(), env), "Pa");
    return 0;
}

int cmd_simulate(const Options& o) {
    const auto doc = config::load_config(o.scenario);
    if (!doc.sim) throw InputError(o.scenario + ": no sim section");
    sim::PlanarScenario scenario = *doc.sim;
    if (o.dt) scenario.dt = *o.dt;
    std::string out_path = o.out;
    if (out_path.empty() && doc.output) out_path = doc.output->path;

    std::string csv = "t,tip_x,tip_y,heading_x,heading_y,n_contacts,event\n";
    const auto row = [&csv](const sim::SimState& s, const std::string& events) {
        csv += format_number(s.elapsed) + ',' + format_number(s.tip().position.x) + ',' +
               format_number(s.tip().position.y) + ',' + format_number(s.tip_heading.x) + ',' +
               format_number(s.tip_heading.y) + ',' + std::to_string(s.contacts.size()) + ',' + events + '\n';
    };
    row(sim::initial_state(scenario), "");
    const auto result = sim::run(scenario, [&](const sim::SimState& s, std::size_t first) {
        std::string events;
        for (std::size_t i = first; i < s.event_log.size(); ++i) {
            if (!events.empty()) events += ';';
            events += sim::to_string(s.event_log[i].kind);
        }
        row(s, events);
    });
    if (!out_path.empty()) config::write_file(out_path, csv);

    const auto& s = result.final_state;
    std::cout << "outcome = " << sim::to_string(result.outcome) << '\n';
    line("elapsed", s.elapsed, "s");
    line("tip_x", s.tip().position.x, "m");
    line("tip_y", s.tip().position.y, "m");
    std::cout << "steps = " << s.steps << '\n';
    for (const auto kind : {sim::EventKind::ContactBegin, sim::EventKind::Deflection, sim::EventKind::SqueezeBegin,
                            sim::EventKind::SqueezeEnd}) {
        std::cout << sim::to_string(kind) << " events = " << sim::count_events(s, kind) << '\n';
    }
    if (!out_path.empty()) std::cout << "trajectory written to " << out_path << '\n';
    return 0;
}

int cmd_calibrate(const Options& o) {
    const auto doc = load(o.config);
    const RobotParams p = robot_from(doc, o.config);
    const auto& d = p.device;
    const double lumped =
        actuation::calibrate_lumped_losses(o.voltage, d.roller_radius_r, d.motor_resistance_R, d.torque_constant_Ktau);
    line("V", o.voltage, "V");
    line("Fe_Fi_Fl", lumped, "N");
    line("Fl_given_Fe_Fi", lumped - p.tip_forces(), "N");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Everting toroidal robot models: force balance, motor voltage, anchoring, planar motion"};
    app.require_subcommand(1);
    Options o;

    auto* solve = app.add_subcommand("solve", "Force balance and stall voltage at one pipe angle");
    solve->add_option("--config", o.config, "Config file (defaults to the built-in robot)");
    solve->add_option("--angle", o.angle_deg, "Pipe angle in degrees");

    auto* sweep = app.add_subcommand("sweep-angle", "Voltage and forces over a range of angles");
    sweep->add_option("--config", o.config, "Config file");
    sweep->add_option("--from", o.from, "First angle, degrees");
    sweep->add_option("--to", o.to, "Last angle, degrees");
    sweep->add_option("--step", o.step, "Angle step, degrees");
    sweep->add_option("--v0", o.v0, "Calibrate Fl to this level-ground voltage first");
    sweep->add_option("--measured", o.measured, "CSV of measured theta_deg,V_volts points");
    sweep->add_option("--out", o.out, "Output file (stdout if omitted)");
    sweep->add_option("--format", o.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

    auto* slip = app.add_subcommand("slip", "Anchoring margin, or the slip load over the test pressures");
    slip->add_option("--config", o.config, "Config file");
    slip->add_option("--angle", o.angle_opt, "Pipe angle in degrees");
    slip->add_option("--pressure", o.pressure_kpa, "Internal pressure in kPa");
    slip->add_flag("--with-battery", o.with_battery, "Add the battery to the device weight");
    slip->add_flag("--sweep", o.sweep, "Sweep the five test pressures");
    slip->add_option("--measured", o.measured, "CSV of measured P_Pa,W_total_N points (with --sweep)");
    slip->add_option("--out", o.out, "Output file for --sweep");
    slip->add_option("--format", o.format, "csv or text")->check(CLI::IsMember({"csv", "text"}));

    auto* minp = app.add_subcommand("min-pressure", "Lowest pressure that holds the robot in a vertical pipe");
    minp->add_option("--config", o.config, "Config file");
    minp->add_flag("--with-battery", o.with_battery, "Add the battery to the device weight");

    auto* simulate = app.add_subcommand("simulate", "Run a planar locomotion scenario");
    simulate->add_option("--scenario", o.scenario, "Scenario config with a sim section")->required();
    simulate->add_option("--out", o.out, "Trajectory CSV");
    simulate->add_option("--dt", o.dt, "Override the time step, seconds");

    auto* calibrate = app.add_subcommand("calibrate", "Fe + Fi + Fl from the level-ground stall voltage");
    calibrate->add_option("--config", o.config, "Config file");
    calibrate->add_option("--voltage", o.voltage, "Measured voltage at 0 degrees")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve) return cmd_solve(o);
        if (*sweep) return cmd_sweep_angle(o);
        if (*slip) return cmd_slip(o);
        if (*minp) return cmd_min_pressure(o);
        if (*simulate) return cmd_simulate(o);
        if (*calibrate) return cmd_calibrate(o);
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const config::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitInput;
    } catch (const config::IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
