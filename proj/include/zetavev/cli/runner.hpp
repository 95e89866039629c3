#ifndef ZETAVEV_CLI_RUNNER_HPP_
#define ZETAVEV_CLI_RUNNER_HPP_

#include <cmath>
#include <future>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "zetavev/cli/config.hpp"
#include "zetavev/cli/report_io.hpp"
#include "zetavev/scenarios.hpp"

namespace zetavev::cli {

struct RunOptions {
    std::optional<double> damping;
    std::optional<int> n_max;
    std::optional<OutputFormat> output;
};

namespace detail {

inline std::vector<TimeParameter> time_grid(const std::map<std::string, double>& p,
                                            double damping)
{
    const double t_min = p.at("T_min");
    const double t_max = p.at("T_max");
    const long points = std::lround(p.at("T_points"));
    if (!(t_min > 0.0) || !(t_max > t_min) || points < 2) {
        throw config_error("time grid needs 0 < T_min < T_max and T_points >= 2");
    }
    std::vector<TimeParameter> grid;
    const double step = std::log(t_max / t_min) / static_cast<double>(points - 1);
    for (long i = 0; i < points; ++i) {
        const double t = i + 1 == points ? t_max : t_min * std::exp(step * static_cast<double>(i));
        grid.emplace_back(t, damping);
    }
    return grid;
}

}  // namespace detail

/// Evaluates one parameter point; parameters must already be resolved.
inline VevReport run_point(Scenario scenario, const std::map<std::string, double>& p,
                           const RunOptions& options = {})
{
    const double damping = options.damping.value_or(0.0);
    const int n_max = options.n_max.value_or(4);
    switch (scenario) {
    case Scenario::casimir:
        return casimir_report(p.at("X"));
    case Scenario::trace_id:
        return trace_identity_report(p.at("X"));
    case Scenario::real_scalar:
        return real_scalar_report(p.at("X"), detail::time_grid(p, damping), n_max);
    case Scenario::complex_scalar:
        return complex_scalar_report(p.at("X"), detail::time_grid(p, damping), n_max);
    case Scenario::dirac_residue:
        return dirac_report(p.at("m"), static_cast<int>(std::lround(p.at("N"))));
    case Scenario::fermion_background: {
        FermionParams fp;
        fp.X = p.at("X");
        fp.m = p.at("m");
        fp.flux = p.at("flux");
        fp.n_plus = std::lround(p.at("Nplus"));
        fp.n_minus = std::lround(p.at("Nminus"));
        return fermion_background_report(fp);
    }
    }
    throw config_error("unhandled scenario");
}

struct PointResult {
    std::string text;
    bool ok = true;
    std::string error;
};

inline PointResult render_point(const ScenarioConfig& cfg, const std::map<std::string, double>& p,
                                const RunOptions& options)
{
    const auto label = point_label(cfg.scenario, p);
    try {
        const auto report = run_point(cfg.scenario, p, options);
        return {format_report(report, label, options.output.value_or(cfg.output)), true, {}};
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::config) {
            throw;
        }
        return {"# " + label + "\n# error: " + e.what() + '\n', false, e.what()};
    }
}

/// compute: the single point described by the base parameters.
inline PointResult run_compute(const ScenarioConfig& cfg, const RunOptions& options = {})
{
    for (const auto& spec : parameter_schema(cfg.scenario)) {
        if (spec.required && !cfg.parameters.contains(spec.name)) {
            throw config_error("compute needs parameter '" + spec.name +
                               "' (it is only given as a sweep)");
        }
    }
    return render_point(cfg, resolve_parameters(cfg), options);
}

/// sweep: every sweep value, evaluated concurrently, emitted in sweep order.
inline std::vector<PointResult> run_sweep(const ScenarioConfig& cfg, const RunOptions& options = {})
{
    if (!cfg.sweep) {
        throw config_error("sweep needs sweep.parameter and sweep.values in the config");
    }
    std::vector<std::future<PointResult>> pending;
    for (double v : cfg.sweep->values) {
        auto params = resolve_parameters(cfg, std::make_pair(cfg.sweep->parameter, v));
        pending.push_back(std::async(std::launch::async, [&cfg, &options, params] {
            return render_point(cfg, params, options);
        }));
    }
    std::vector<PointResult> out;
    for (auto& f : pending) {
        out.push_back(f.get());
    }
    return out;
}

}  // namespace zetavev::cli

#endif  // ZETAVEV_CLI_RUNNER_HPP_
