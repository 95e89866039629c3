#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "zetavev/cli/config.hpp"
#include "zetavev/cli/report_io.hpp"
#include "zetavev/cli/runner.hpp"
#include "zetavev/cli/verification.hpp"

namespace {

using namespace zetavev;
using namespace zetavev::cli;

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

int print_points(const std::vector<PointResult>& points)
{
    bool ok = true;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i > 0) {
            std::cout << '\n';
        }
        std::cout << points[i].text;
        if (!points[i].ok) {
            std::cerr << "error: " << points[i].error << '\n';
            ok = false;
        }
    }
    std::cout.flush();
    return ok ? exit_ok : exit_failure;
}

int run_verify_command(Profile profile)
{
    const auto results = run_verification(profile);
    std::size_t width = 5;
    for (const auto& r : results) {
        width = std::max(width, r.name.size());
    }
    bool ok = true;
    std::cout << (profile == Profile::strict ? "profile: strict\n" : "profile: default\n");
    for (const auto& r : results) {
        std::string line = r.pass ? "PASS  " : "FAIL  ";
        line += r.name;
        line.append(width - r.name.size() + 2, ' ');
        line += "error=" + format_number(r.error) + "  tolerance=" + format_number(r.tolerance);
        if (!r.failure.empty()) {
            line += "  (" + r.failure + ")";
        }
        std::cout << line << '\n';
        ok = ok && r.pass;
    }
    std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
    return ok ? exit_ok : exit_failure;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"zeta-regularized vacuum expectation values"};
    app.require_subcommand(1);

    std::string output_flag;
    std::optional<double> damping;
    std::optional<int> n_max;
    app.add_option("--output", output_flag, "table or records")
        ->check(CLI::IsMember({"table", "records"}));
    app.add_option("--damping", damping, "i0+ damping eta >= 0");
    app.add_option("--nmax", n_max, "Fock-series truncation N_max >= 1");

    std::string compute_path;
    auto* compute = app.add_subcommand("compute", "evaluate one scenario config");
    compute->add_option("config", compute_path, "config file")->required();

    std::string sweep_path;
    auto* sweep = app.add_subcommand("sweep", "evaluate a config over its sweep values");
    sweep->add_option("config", sweep_path, "config file")->required();

    bool strict = false;
    auto* verify = app.add_subcommand("verify", "run the oracle cross-check catalog");
    verify->add_flag("--strict", strict, "tighten every tolerance tenfold");

    // Global flags are accepted after the subcommand as well.
    for (auto* sub : {compute, sweep}) {
        sub->fallthrough();
    }
    verify->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        RunOptions options;
        if (!output_flag.empty()) {
            options.output = parse_output_format(output_flag);
        }
        if (damping) {
            if (!(*damping >= 0.0)) {
                throw config_error("--damping must be >= 0");
            }
            options.damping = damping;
        }
        if (n_max) {
            if (*n_max < 1) {
                throw config_error("--nmax must be >= 1");
            }
            options.n_max = n_max;
        }

        if (*verify) {
            Profile profile = Profile::standard;
            if (const char* env = std::getenv("ZETAVEV_PRECISION_PROFILE"); env && *env) {
                profile = parse_profile(env);
            }
            if (strict) {
                profile = Profile::strict;
            }
            return run_verify_command(profile);
        }
        if (*compute) {
            return print_points({run_compute(load_config(compute_path), options)});
        }
        return print_points(run_sweep(load_config(sweep_path), options));
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == ErrorKind::config ? exit_usage : exit_failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
}
