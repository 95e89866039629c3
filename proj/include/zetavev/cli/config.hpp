#ifndef ZETAVEV_CLI_CONFIG_HPP_
#define ZETAVEV_CLI_CONFIG_HPP_

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "zetavev/error.hpp"

namespace zetavev::cli {

enum class Scenario {
    real_scalar,
    complex_scalar,
    dirac_residue,
    fermion_background,
    casimir,
    trace_id
};

enum class OutputFormat { table, records };

inline constexpr std::array<Scenario, 6> all_scenarios{
    Scenario::real_scalar,        Scenario::complex_scalar, Scenario::dirac_residue,
    Scenario::fermion_background, Scenario::casimir,        Scenario::trace_id};

inline const char* to_string(Scenario s)
{
    switch (s) {
    case Scenario::real_scalar: return "real_scalar";
    case Scenario::complex_scalar: return "complex_scalar";
    case Scenario::dirac_residue: return "dirac_residue";
    case Scenario::fermion_background: return "fermion_background";
    case Scenario::casimir: return "casimir";
    case Scenario::trace_id: return "trace_id";
    }
    return "?";
}

inline const char* to_string(OutputFormat f)
{
    return f == OutputFormat::table ? "table" : "records";
}

inline Error config_error(const std::string& what) { return Error(ErrorKind::config, what); }

inline Scenario parse_scenario(std::string_view name)
{
    for (auto s : all_scenarios) {
        if (name == to_string(s)) {
            return s;
        }
    }
    throw config_error("unknown scenario '" + std::string(name) + "'");
}

inline OutputFormat parse_output_format(std::string_view name)
{
    if (name == "table") {
        return OutputFormat::table;
    }
    if (name == "records") {
        return OutputFormat::records;
    }
    throw config_error("output must be 'table' or 'records', got '" + std::string(name) + "'");
}

struct ParameterSpec {
    std::string name;
    bool required;
    double fallback;
    bool integer;
};

/// Accepted parameters per scenario, in canonical order.
inline std::vector<ParameterSpec> parameter_schema(Scenario s)
{
    const std::vector<ParameterSpec> time_grid{
        {"T_min", false, 1e3, false}, {"T_max", false, 1e6, false}, {"T_points", false, 4, true}};
    std::vector<ParameterSpec> out;
    switch (s) {
    case Scenario::casimir:
    case Scenario::trace_id:
        out = {{"X", true, 0, false}};
        break;
    case Scenario::real_scalar:
    case Scenario::complex_scalar:
        out = {{"X", true, 0, false}};
        out.insert(out.end(), time_grid.begin(), time_grid.end());
        break;
    case Scenario::dirac_residue:
        out = {{"m", true, 0, false}, {"N", true, 0, true}};
        break;
    case Scenario::fermion_background:
        out = {{"X", true, 0, false},
               {"m", false, 0, false},
               {"flux", false, 0, false},
               {"Nplus", false, 0, true},
               {"Nminus", false, 0, true}};
        break;
    }
    return out;
}

struct Sweep {
    std::string parameter;
    std::vector<double> values;
    bool operator==(const Sweep&) const = default;
};

struct ScenarioConfig {
    Scenario scenario = Scenario::casimir;
    std::map<std::string, double> parameters;
    std::optional<Sweep> sweep;
    OutputFormat output = OutputFormat::records;
    bool operator==(const ScenarioConfig&) const = default;
};

namespace detail {

inline std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

inline double parse_number(std::string_view text, const std::string& key)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
        !std::isfinite(value)) {
        throw config_error("parameter '" + key + "': '" + std::string(text) +
                           "' is not a finite number");
    }
    return value;
}

/// Shortest decimal form that parses back to the same double.
inline std::string shortest(double v)
{
    std::array<char, 64> buf{};
    const auto r = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), r.ptr);
}

}  // namespace detail

inline const ParameterSpec* find_parameter(const std::vector<ParameterSpec>& schema,
                                           const std::string& name)
{
    const auto it = std::find_if(schema.begin(), schema.end(),
                                 [&](const ParameterSpec& p) { return p.name == name; });
    return it == schema.end() ? nullptr : &*it;
}

inline void check_value(const ParameterSpec& spec, double v)
{
    if (spec.integer && v != std::round(v)) {
        throw config_error("parameter '" + spec.name + "' must be an integer");
    }
}

/// Names, integrality and presence of required parameters.
inline void validate(const ScenarioConfig& cfg)
{
    const auto schema = parameter_schema(cfg.scenario);
    for (const auto& [name, value] : cfg.parameters) {
        const auto* spec = find_parameter(schema, name);
        if (spec == nullptr) {
            throw config_error("unknown parameter '" + name + "' for scenario " +
                               to_string(cfg.scenario));
        }
        check_value(*spec, value);
    }
    if (cfg.sweep) {
        const auto* spec = find_parameter(schema, cfg.sweep->parameter);
        if (spec == nullptr) {
            throw config_error("sweep parameter '" + cfg.sweep->parameter +
                               "' is not a parameter of scenario " + to_string(cfg.scenario));
        }
        if (cfg.sweep->values.empty()) {
            throw config_error("sweep.values is empty");
        }
        for (double v : cfg.sweep->values) {
            check_value(*spec, v);
        }
    }
    for (const auto& spec : schema) {
        const bool swept = cfg.sweep && cfg.sweep->parameter == spec.name;
        if (spec.required && !swept && !cfg.parameters.contains(spec.name)) {
            throw config_error("missing required parameter '" + spec.name + "' for scenario " +
                               to_string(cfg.scenario));
        }
    }
}

/// Parameters with defaults filled in and an optional override.
inline std::map<std::string, double> resolve_parameters(
    const ScenarioConfig& cfg, const std::optional<std::pair<std::string, double>>& point = {})
{
    std::map<std::string, double> out;
    for (const auto& spec : parameter_schema(cfg.scenario)) {
        if (!spec.required) {
            out[spec.name] = spec.fallback;
        }
    }
    for (const auto& [k, v] : cfg.parameters) {
        out[k] = v;
    }
    if (point) {
        out[point->first] = point->second;
    }
    return out;
}

/// Parses `key = value` lines; `#` starts a comment.
inline ScenarioConfig parse_config(std::string_view text)
{
    ScenarioConfig cfg;
    bool have_scenario = false;
    std::optional<std::string> sweep_parameter;
    std::optional<std::vector<double>> sweep_values;
    std::map<std::string, int> seen;

    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = detail::trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw config_error("line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(detail::trim(line.substr(0, eq)));
        const std::string_view value = detail::trim(line.substr(eq + 1));
        if (key.empty()) {
            throw config_error("line " + std::to_string(line_no) + ": empty key");
        }
        if (seen[key]++ > 0) {
            throw config_error("line " + std::to_string(line_no) + ": duplicate key '" + key + "'");
        }
        if (key == "scenario") {
            cfg.scenario = parse_scenario(value);
            have_scenario = true;
        } else if (key == "output") {
            cfg.output = parse_output_format(value);
        } else if (key == "sweep.parameter") {
            sweep_parameter = std::string(value);
        } else if (key == "sweep.values") {
            std::vector<double> values;
            std::string_view rest = value;
            while (true) {
                const auto comma = rest.find(',');
                values.push_back(detail::parse_number(rest.substr(0, comma), key));
                if (comma == std::string_view::npos) {
                    break;
                }
                rest.remove_prefix(comma + 1);
            }
            sweep_values = std::move(values);
        } else {
            cfg.parameters[key] = detail::parse_number(value, key);
        }
    }
    if (!have_scenario) {
        throw config_error("missing 'scenario' key");
    }
    if (sweep_parameter.has_value() != sweep_values.has_value()) {
        throw config_error("sweep.parameter and sweep.values must be given together");
    }
    if (sweep_parameter) {
        cfg.sweep = Sweep{*sweep_parameter, *sweep_values};
    }
    validate(cfg);
    return cfg;
}

inline ScenarioConfig load_config(const std::string& path)
{
    std::ifstream file(path);
    if (!file) {
        throw config_error("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_config(buffer.str());
}

inline std::string serialize(const ScenarioConfig& cfg)
{
    std::string out = "scenario = ";
    out += to_string(cfg.scenario);
    out += "\noutput = ";
    out += to_string(cfg.output);
    out += '\n';
    for (const auto& [k, v] : cfg.parameters) {
        out += k + " = " + detail::shortest(v) + '\n';
    }
    if (cfg.sweep) {
        out += "sweep.parameter = " + cfg.sweep->parameter + "\nsweep.values = ";
        for (std::size_t i = 0; i < cfg.sweep->values.size(); ++i) {
            out += (i ? ", " : "") + detail::shortest(cfg.sweep->values[i]);
        }
        out += '\n';
    }
    return out;
}

}  // namespace zetavev::cli

#endif  // ZETAVEV_CLI_CONFIG_HPP_
