#include "toroid/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include <json.hpp>

namespace toroid::config {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using Kind = ConfigError::Kind;

enum class Dim { Force, Length, Angle, Pressure, Resistance, TorqueConstant, Voltage, Current, Torque, Speed, Time, Ratio };

struct UnitDef {
    std::string_view name;
    double (*to_si)(double);
};

// The first unit of each dimension is the SI unit used when writing.
const std::vector<UnitDef>& units_for(Dim dim) {
    static const std::vector<UnitDef> force{
        {"N", [](double v) { return v; }},
        {"kN", [](double v) { return v * 1e3; }},
        {"g", [](double v) { return units::grams_to_newtons(v); }},
        {"kg", [](double v) { return units::kg_to_newtons(v); }},
    };
    static const std::vector<UnitDef> length{
        {"m", [](double v) { return v; }},
        {"cm", [](double v) { return v * 1e-2; }},
        {"mm", [](double v) { return v * 1e-3; }},
    };
    static const std::vector<UnitDef> angle{
        {"rad", [](double v) { return v; }},
        {"deg", [](double v) { return units::degrees_to_radians(v); }},
    };
    static const std::vector<UnitDef> pressure{
        {"Pa", [](double v) { return v; }},
        {"kPa", [](double v) { return units::kpa_to_pa(v); }},
    };
    static const std::vector<UnitDef> resistance{{"ohm", [](double v) { return v; }}};
    static const std::vector<UnitDef> torque_constant{
        {"N*m/A", [](double v) { return v; }},
        {"kg-cm/A", [](double v) { return units::kg_cm_to_newton_metres(v); }},
    };
    static const std::vector<UnitDef> voltage{{"V", [](double v) { return v; }}};
    static const std::vector<UnitDef> current{{"A", [](double v) { return v; }}};
    static const std::vector<UnitDef> torque{
        {"N*m", [](double v) { return v; }},
        {"kg-cm", [](double v) { return units::kg_cm_to_newton_metres(v); }},
    };
    static const std::vector<UnitDef> speed{
        {"m/s", [](double v) { return v; }},
        {"cm/s", [](double v) { return v * 1e-2; }},
    };
    static const std::vector<UnitDef> time{
        {"s", [](double v) { return v; }},
        {"ms", [](double v) { return v * 1e-3; }},
    };
    static const std::vector<UnitDef> ratio{{"1", [](double v) { return v; }}};
    switch (dim) {
        case Dim::Force: return force;
        case Dim::Length: return length;
        case Dim::Angle: return angle;
        case Dim::Pressure: return pressure;
        case Dim::Resistance: return resistance;
        case Dim::TorqueConstant: return torque_constant;
        case Dim::Voltage: return voltage;
        case Dim::Current: return current;
        case Dim::Torque: return torque;
        case Dim::Speed: return speed;
        case Dim::Time: return time;
        case Dim::Ratio: return ratio;
    }
    return ratio;
}

std::string_view si_unit(Dim dim) { return units_for(dim).front().name; }

std::string join(const std::string& path, std::string_view key) {
    return path.empty() ? std::string(key) : path + "." + std::string(key);
}

void expect_object(const json& j, const std::string& path) {
    if (!j.is_object()) throw ConfigError(Kind::Type, "type error: " + path + " must be an object");
}

void check_keys(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
    expect_object(j, path.empty() ? "document" : path);
    for (const auto& [key, value] : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
            throw ConfigError(Kind::UnknownKey, "unknown key \"" + key + "\" in " + (path.empty() ? "document" : path));
        }
    }
}

const json& require(const json& j, const std::string& path, std::string_view key) {
    const auto it = j.find(std::string(key));
    if (it == j.end()) throw ConfigError(Kind::MissingKey, "missing key " + join(path, key));
    return *it;
}

bool has(const json& j, std::string_view key) { return j.contains(std::string(key)); }

// Returns the value node and the SI conversion for a tagged quantity.
std::pair<const json&, double (*)(double)> tagged(const json& q, const std::string& path, Dim dim) {
    if (!q.is_object()) {
        throw ConfigError(Kind::Unit, "unit error: " + path + " must be {\"value\": ..., \"unit\": ...}");
    }
    check_keys(q, path, {"value", "unit"});
    if (!has(q, "unit")) throw ConfigError(Kind::Unit, "unit error: " + path + " has no unit");
    const json& unit = q.at("unit");
    if (!unit.is_string()) throw ConfigError(Kind::Unit, "unit error: " + path + " unit must be a string");
    const auto name = unit.get<std::string>();
    const auto& table = units_for(dim);
    const auto def = std::find_if(table.begin(), table.end(), [&](const UnitDef& u) { return u.name == name; });
    if (def == table.end()) {
        std::string accepted;
        for (const auto& u : table) accepted += (accepted.empty() ? "" : ", ") + std::string(u.name);
        throw ConfigError(Kind::Unit, "unit error: " + path + " does not accept unit \"" + name + "\" (expected " +
                                          accepted + ")");
    }
    return {require(q, path, "value"), def->to_si};
}

double number(const json& j, const std::string& path) {
    if (!j.is_number()) throw ConfigError(Kind::Type, "type error: " + path + " must be a number");
    const double v = j.get<double>();
    if (!std::isfinite(v)) throw ConfigError(Kind::Value, "value error: " + path + " must be finite");
    return v;
}

double quantity(const json& parent, const std::string& path, std::string_view key, Dim dim) {
    const std::string here = join(path, key);
    const auto [value, to_si] = tagged(require(parent, path, key), here, dim);
    return to_si(number(value, here + ".value"));
}

std::vector<double> number_list(const json& j, const std::string& path, std::size_t expected) {
    if (!j.is_array() || (expected && j.size() != expected)) {
        throw ConfigError(Kind::Type, "type error: " + path + " must be an array of " + std::to_string(expected) +
                                          " numbers");
    }
    std::vector<double> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], path + "[" + std::to_string(i) + "]"));
    return out;
}

// Array of fixed-width rows of lengths, e.g. [[x1, y1, x2, y2], ...].
std::vector<std::vector<double>> length_rows(const json& parent, const std::string& path, std::string_view key,
                                             std::size_t width) {
    const std::string here = join(path, key);
    const auto [value, to_si] = tagged(require(parent, path, key), here, Dim::Length);
    if (!value.is_array()) throw ConfigError(Kind::Type, "type error: " + here + ".value must be an array");
    std::vector<std::vector<double>> out;
    for (std::size_t i = 0; i < value.size(); ++i) {
        auto row = number_list(value[i], here + ".value[" + std::to_string(i) + "]", width);
        for (double& v : row) v = to_si(v);
        out.push_back(std::move(row));
    }
    return out;
}

template <typename F>
void domain_checked(const std::string& section, F&& check) {
    try {
        check();
    } catch (const DomainError& e) {
        throw ConfigError(Kind::Value, "value error in " + section + ": " + e.what());
    }
}

RobotParams parse_robot(const json& j) {
    const std::string path = "robot";
    check_keys(j, path, {"membrane", "device"});
    RobotParams p;

    const std::string mpath = "robot.membrane";
    const json& m = require(j, path, "membrane");
    check_keys(m, mpath, {"weight", "outer_diameter", "eversion_force", "inversion_force"});
    p.membrane.weight_Wm = quantity(m, mpath, "weight", Dim::Force);
    p.membrane.inflated_outer_diameter = quantity(m, mpath, "outer_diameter", Dim::Length);
    p.membrane.eversion_force_Fe = quantity(m, mpath, "eversion_force", Dim::Force);
    p.membrane.inversion_force_Fi = quantity(m, mpath, "inversion_force", Dim::Force);

    const std::string dpath = "robot.device";
    const json& d = require(j, path, "device");
    check_keys(d, dpath, {"weight", "battery_weight", "roller_radius", "motor", "loss_force", "outer_diameter"});
    p.device.weight_Wd = quantity(d, dpath, "weight", Dim::Force);
    if (has(d, "battery_weight")) p.device.battery_weight = quantity(d, dpath, "battery_weight", Dim::Force);
    p.device.roller_radius_r = quantity(d, dpath, "roller_radius", Dim::Length);
    p.device.loss_force_Fl = quantity(d, dpath, "loss_force", Dim::Force);
    p.device.device_outer_diameter = quantity(d, dpath, "outer_diameter", Dim::Length);

    const std::string motor_path = "robot.device.motor";
    const json& motor = require(d, dpath, "motor");
    check_keys(motor, motor_path,
               {"resistance", "torque_constant", "rated_voltage", "stall_current", "stall_torque"});
    const bool direct = has(motor, "resistance") || has(motor, "torque_constant");
    const bool rated = has(motor, "rated_voltage") || has(motor, "stall_current") || has(motor, "stall_torque");
    if (direct == rated) {
        throw ConfigError(Kind::Value, "value error: " + motor_path +
                                           " needs either resistance + torque_constant or rated_voltage + "
                                           "stall_current + stall_torque");
    }
    if (direct) {
        p.device.motor_resistance_R = quantity(motor, motor_path, "resistance", Dim::Resistance);
        p.device.torque_constant_Ktau = quantity(motor, motor_path, "torque_constant", Dim::TorqueConstant);
    } else {
        const double v = quantity(motor, motor_path, "rated_voltage", Dim::Voltage);
        const double i = quantity(motor, motor_path, "stall_current", Dim::Current);
        const double t = quantity(motor, motor_path, "stall_torque", Dim::Torque);
        if (!(v > 0.0) || !(i > 0.0) || !(t > 0.0)) {
            throw ConfigError(Kind::Value, "value error: " + motor_path + " ratings must be positive");
        }
        p.device.motor_resistance_R = v / i;
        p.device.torque_constant_Ktau = t / i;
    }
    domain_checked(path, [&] { validate(p); });
    return p;
}

PipeEnvironment parse_environment(const json& j) {
    const std::string path = "environment";
    check_keys(j, path,
               {"inner_radius", "angle", "contact_length", "membrane_length", "pipe_length", "mu_static", "pressure",
                "burst_pressure"});
    PipeEnvironment env;
    env.inner_radius_R = quantity(j, path, "inner_radius", Dim::Length);
    env.angle_theta = quantity(j, path, "angle", Dim::Angle);
    if (has(j, "contact_length")) {
        if (has(j, "membrane_length") || has(j, "pipe_length")) {
            throw ConfigError(Kind::Value, "value error: environment gives contact_length and membrane/pipe lengths");
        }
        env.contact_length_L = quantity(j, path, "contact_length", Dim::Length);
    } else {
        env.contact_length_L = contact_length(quantity(j, path, "membrane_length", Dim::Length),
                                              quantity(j, path, "pipe_length", Dim::Length));
    }
    env.mu_static = quantity(j, path, "mu_static", Dim::Ratio);
    env.pressure_P = quantity(j, path, "pressure", Dim::Pressure);
    if (has(j, "burst_pressure")) env.burst_pressure = quantity(j, path, "burst_pressure", Dim::Pressure);
    domain_checked(path, [&] { validate(env); });
    return env;
}

sim::PlanarScenario parse_sim(const json& j) {
    const std::string path = "sim";
    check_keys(j, path,
               {"walls", "start", "body_length", "membrane_diameter", "device_diameter", "tip_speed", "goal_region",
                "max_sim_time", "dt"});
    sim::PlanarScenario s;
    s.walls.clear();
    for (const auto& row : length_rows(j, path, "walls", 4)) {
        s.walls.push_back({{row[0], row[1]}, {row[2], row[3]}});
    }

    const std::string spath = "sim.start";
    const json& start = require(j, path, "start");
    check_keys(start, spath, {"position", "heading"});
    {
        const std::string here = spath + ".position";
        const auto [value, to_si] = tagged(require(start, spath, "position"), here, Dim::Length);
        const auto xy = number_list(value, here + ".value", 2);
        s.start.position = {to_si(xy[0]), to_si(xy[1])};
    }
    {
        const std::string here = spath + ".heading";
        const json& h = require(start, spath, "heading");
        if (h.is_object() && h.contains("value") && h.at("value").is_array()) {
            const auto [value, to_si] = tagged(h, here, Dim::Ratio);
            const auto xy = number_list(value, here + ".value", 2);
            geom::Vec2 v{to_si(xy[0]), to_si(xy[1])};
            const double n = geom::norm(v);
            if (!(n > 0.0)) throw ConfigError(Kind::Value, "value error: " + here + " must be nonzero");
            if (std::abs(n - 1.0) > 1e-12) v = geom::normalized(v);
            s.start.heading = v;
        } else {
            const double a = quantity(start, spath, "heading", Dim::Angle);
            s.start.heading = {std::cos(a), std::sin(a)};
        }
    }
    s.robot_body_length = quantity(j, path, "body_length", Dim::Length);
    s.membrane_diameter = quantity(j, path, "membrane_diameter", Dim::Length);
    s.device_diameter = quantity(j, path, "device_diameter", Dim::Length);
    s.tip_speed = quantity(j, path, "tip_speed", Dim::Speed);
    s.goal_region.clear();
    if (has(j, "goal_region")) {
        for (const auto& row : length_rows(j, path, "goal_region", 2)) s.goal_region.push_back({row[0], row[1]});
    }
    s.max_sim_time = quantity(j, path, "max_sim_time", Dim::Time);
    if (has(j, "dt")) s.dt = quantity(j, path, "dt", Dim::Time);
    domain_checked(path, [&] { sim::validate(s); });
    return s;
}

OutputSpec parse_output(const json& j) {
    const std::string path = "output";
    check_keys(j, path, {"path", "format"});
    OutputSpec out;
    const json& p = require(j, path, "path");
    if (!p.is_string()) throw ConfigError(Kind::Type, "type error: output.path must be a string");
    out.path = p.get<std::string>();
    if (has(j, "format")) {
        const json& f = j.at("format");
        if (!f.is_string()) throw ConfigError(Kind::Type, "type error: output.format must be a string");
        out.format = f.get<std::string>();
    }
    if (out.format != "csv" && out.format != "text") {
        throw ConfigError(Kind::Value, "value error: output.format must be \"csv\" or \"text\"");
    }
    return out;
}

ordered_json q(double si_value, Dim dim) {
    ordered_json out;
    out["value"] = si_value;
    out["unit"] = std::string(si_unit(dim));
    return out;
}

}  // namespace

ConfigDocument parse_config(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        // e.byte is 1-based and points just past the offending character.
        const std::size_t limit = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i < limit; ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ConfigError(Kind::Syntax, "parse error at line " + std::to_string(line) + ", column " +
                                            std::to_string(column) + ": " + e.what());
    }

    check_keys(root, "", {"robot", "environment", "sim", "output"});
    ConfigDocument doc;
    if (has(root, "robot")) doc.robot = parse_robot(root.at("robot"));
    if (has(root, "environment")) doc.environment = parse_environment(root.at("environment"));
    if (has(root, "sim")) doc.sim = parse_sim(root.at("sim"));
    if (has(root, "output")) doc.output = parse_output(root.at("output"));
    return doc;
}

std::string serialize_config(const ConfigDocument& doc) {
    ordered_json root = ordered_json::object();
    if (doc.robot) {
        const auto& p = *doc.robot;
        ordered_json membrane;
        membrane["weight"] = q(p.membrane.weight_Wm, Dim::Force);
        membrane["outer_diameter"] = q(p.membrane.inflated_outer_diameter, Dim::Length);
        membrane["eversion_force"] = q(p.membrane.eversion_force_Fe, Dim::Force);
        membrane["inversion_force"] = q(p.membrane.inversion_force_Fi, Dim::Force);
        ordered_json motor;
        motor["resistance"] = q(p.device.motor_resistance_R, Dim::Resistance);
        motor["torque_constant"] = q(p.device.torque_constant_Ktau, Dim::TorqueConstant);
        ordered_json device;
        device["weight"] = q(p.device.weight_Wd, Dim::Force);
        device["battery_weight"] = q(p.device.battery_weight, Dim::Force);
        device["roller_radius"] = q(p.device.roller_radius_r, Dim::Length);
        device["motor"] = motor;
        device["loss_force"] = q(p.device.loss_force_Fl, Dim::Force);
        device["outer_diameter"] = q(p.device.device_outer_diameter, Dim::Length);
        root["robot"]["membrane"] = membrane;
        root["robot"]["device"] = device;
    }
    if (doc.environment) {
        const auto& e = *doc.environment;
        ordered_json env;
        env["inner_radius"] = q(e.inner_radius_R, Dim::Length);
        env["angle"] = q(e.angle_theta, Dim::Angle);
        env["contact_length"] = q(e.contact_length_L, Dim::Length);
        env["mu_static"] = q(e.mu_static, Dim::Ratio);
        env["pressure"] = q(e.pressure_P, Dim::Pressure);
        env["burst_pressure"] = q(e.burst_pressure, Dim::Pressure);
        root["environment"] = env;
    }
    if (doc.sim) {
        const auto& s = *doc.sim;
        ordered_json walls = ordered_json::array();
        for (const auto& w : s.walls) walls.push_back({w.a.x, w.a.y, w.b.x, w.b.y});
        ordered_json sim;
        sim["walls"] = {{"value", walls}, {"unit", "m"}};
        ordered_json start;
        start["position"] = {{"value", {s.start.position.x, s.start.position.y}}, {"unit", "m"}};
        start["heading"] = {{"value", {s.start.heading.x, s.start.heading.y}}, {"unit", "1"}};
        sim["start"] = start;
        sim["body_length"] = q(s.robot_body_length, Dim::Length);
        sim["membrane_diameter"] = q(s.membrane_diameter, Dim::Length);
        sim["device_diameter"] = q(s.device_diameter, Dim::Length);
        sim["tip_speed"] = q(s.tip_speed, Dim::Speed);
        if (!s.goal_region.empty()) {
            ordered_json goal = ordered_json::array();
            for (const auto& v : s.goal_region) goal.push_back({v.x, v.y});
            sim["goal_region"] = {{"value", goal}, {"unit", "m"}};
        }
        sim["max_sim_time"] = q(s.max_sim_time, Dim::Time);
        sim["dt"] = q(s.dt, Dim::Time);
        root["sim"] = sim;
    }
    if (doc.output) {
        root["output"]["path"] = doc.output->path;
        root["output"]["format"] = doc.output->format;
    }
    return root.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    if (!out) throw IoError("cannot write " + path);
}

ConfigDocument load_config(const std::string& path) { return parse_config(read_file(path)); }

}  // namespace toroid::config
