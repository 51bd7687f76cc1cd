// Strict configuration documents.
//
// A config is a JSON object with optional "robot", "environment", "sim" and
// "output" sections. Every physical quantity is written as
//
//     {"value": 85, "unit": "g"}
//
// and converted to SI on load. Unknown keys and untagged quantities are
// rejected so a misspelt key cannot silently fall back to a default.
#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "toroid/core_types.hpp"
#include "toroid/locomotion_sim.hpp"

namespace toroid::config {

class ConfigError : public std::runtime_error {
public:
    enum class Kind { Syntax, Unit, UnknownKey, MissingKey, Type, Value };

    ConfigError(Kind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OutputSpec {
    std::string path;
    std::string format = "csv";  // "csv" or "text"

    friend bool operator==(const OutputSpec&, const OutputSpec&) = default;
};

struct ConfigDocument {
    std::optional<RobotParams> robot;
    std::optional<PipeEnvironment> environment;
    std::optional<sim::PlanarScenario> sim;
    std::optional<OutputSpec> output;

    friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

/// Parses and validates a document. Syntax errors report line and column;
/// unit errors name the offending field.
ConfigDocument parse_config(std::string_view text);

/// Writes the document back with every quantity in SI units. Parsing the
/// result reproduces the document exactly.
std::string serialize_config(const ConfigDocument& doc);

/// Reads a file and parses it.
ConfigDocument load_config(const std::string& path);

/// Whole file as a string. Throws IoError.
std::string read_file(const std::string& path);

/// Throws IoError.
void write_file(const std::string& path, std::string_view contents);

}  // namespace toroid::config
