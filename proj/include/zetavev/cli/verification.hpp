#ifndef ZETAVEV_CLI_VERIFICATION_HPP_
#define ZETAVEV_CLI_VERIFICATION_HPP_

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "zetavev/oracle.hpp"
#include "zetavev/oscillatory.hpp"
#include "zetavev/scenarios.hpp"
#include "zetavev/specfun.hpp"
#include "zetavev/spectral.hpp"

namespace zetavev::cli {

enum class Profile { standard, strict };

inline Profile parse_profile(std::string_view name)
{
    if (name == "default") {
        return Profile::standard;
    }
    if (name == "strict") {
        return Profile::strict;
    }
    throw config_error("precision profile must be 'default' or 'strict', got '" +
                       std::string(name) + "'");
}

struct Check {
    std::string name;
    double tolerance;  // default-profile bound on the measured error
    std::function<double()> measure;
};

struct CheckResult {
    std::string name;
    double error;
    double tolerance;
    bool pass;
    std::string failure;  // set when the measurement itself threw
};

namespace checks {

inline double rel(Complex got, Complex want)
{
    return std::abs(got - want) / std::max(1e-300, std::abs(want));
}

inline double gamma_recurrence()
{
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Complex z(u(rng), u(rng));
        worst = std::max(worst, rel(gamma(z + 1.0), z * gamma(z)));
    }
    return worst;
}

inline double gamma_values()
{
    return std::max({rel(gamma(Complex(0.5)), std::sqrt(std::numbers::pi)),
                     rel(gamma(Complex(5.0)), 24.0), rel(gamma(Complex(1.0)), 1.0)});
}

inline double hurwitz_recurrence()
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-8.0, 8.0);
    std::uniform_real_distribution<double> im(-8.0, 8.0);
    std::uniform_real_distribution<double> ua(0.1, 10.0);
    double worst = 0.0;
    for (int i = 0; i < 300; ++i) {
        const Complex s(re(rng), im(rng));
        const double a = ua(rng);
        const Complex z0 = hurwitz_zeta(s, a);
        const Complex z1 = hurwitz_zeta(s, a + 1.0);
        const Complex power = std::exp(-s * std::log(a));
        const double scale = std::max({std::abs(z0), std::abs(z1), std::abs(power)});
        worst = std::max(worst, std::abs(z0 - z1 - power) / scale);
    }
    return worst;
}

inline double hurwitz_closed_forms()
{
    double worst = 0.0;
    for (int i = 1; i <= 50; ++i) {
        const double a = 0.2 * i;
        const double z1 = -0.5 * ((a - 0.5) * (a - 0.5) - 1.0 / 12.0);
        worst = std::max(worst, std::abs(hurwitz_zeta(0.0, a) - (0.5 - a)));
        worst = std::max(worst, std::abs(hurwitz_zeta(-1.0, a) - z1));
    }
    return worst;
}

inline double hurwitz_extended_agreement()
{
    double worst = 0.0;
    for (int k = 0; k <= 3; ++k) {
        for (double a = 0.05; a < 10.0; a += 0.37) {
            const double want = hurwitz_zeta_extended(k, a);
            worst = std::max(worst, std::abs(hurwitz_zeta(-k, a) - want) /
                                        std::max(1.0, std::abs(want)));
        }
    }
    return worst;
}

/// Worst |hurwitz - partial sum| measured in units of the oracle's bound.
inline double hurwitz_partial_sums()
{
    const std::vector<std::pair<Complex, double>> grid{
        {2.0, 1.0}, {3.0, 1.0}, {2.0, 0.5}, {Complex(2.5, 3.0), 0.3}, {4.0, 7.0}};
    double worst = 0.0;
    for (const auto& [s, a] : grid) {
        const auto ref = partial_sum_reference(s, a, 20000);
        worst = std::max(worst, std::abs(hurwitz_zeta(s, a) - ref.value) / ref.bound);
    }
    return worst;
}

/// Number of violated exact Bernoulli identities.
inline double bernoulli_identities()
{
    const auto& table = BernoulliTable::instance();
    int violations = table.polynomial(0) == std::vector<Rational>{Rational(1)} ? 0 : 1;
    for (int n = 1; n <= BernoulliTable::max_degree; ++n) {
        const auto& p = table.polynomial(n);
        const auto& q = table.polynomial(n - 1);
        for (std::size_t j = 1; j < p.size(); ++j) {
            const Rational want = j - 1 < q.size() ? Rational(n) * q[j - 1] : Rational(0);
            violations += Rational(static_cast<long>(j)) * p[j] == want ? 0 : 1;
        }
        Rational integral = 0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            integral += p[j] / Rational(static_cast<long>(j + 1));
        }
        violations += integral == 0 ? 0 : 1;
    }
    return violations;
}

inline double binomial_series()
{
    double sum = 0.0;
    for (int j = 0; j <= 40; ++j) {
        sum += binom_half(j) * std::pow(0.21, j);
    }
    return std::abs(sum - 1.1);
}

inline double casimir_spectral()
{
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 10.0}) {
        worst = std::max(worst, std::abs(casimir_energy(x) + std::numbers::pi / (6.0 * x)));
    }
    return worst;
}

inline double casimir_smoothed()
{
    double worst = 0.0;
    for (double x : {0.5, 1.0, 2.0, 10.0}) {
        const auto family = SpectralFamily::ascending(2.0 * std::numbers::pi / x, 1.0, 1, 2);
        const double oracle =
            0.5 * smoothed_sum_finite_part(family, 1, SmoothingSchedule::for_family(family, 2));
        worst = std::max(worst, std::abs(oracle - casimir_energy(x)));
    }
    return worst;
}

inline double trace_identity_values()
{
    double worst = 0.0;
    for (double x : {0.3, 1.0, 2.5, 7.3, 100.0}) {
        worst = std::max(worst, std::abs(trace_identity(x) + 1.0));
    }
    return worst;
}

inline double sign_split_continuation()
{
    double worst = 0.0;
    for (int power = 0; power <= 1; ++power) {
        for (double a = -5.0; a <= 5.0; a += 0.173) {
            const auto family = SpectralFamily::ascending(1.7, a);
            if (family.has_zero_mode()) {
                continue;
            }
            const double got = gauged_trace({family, power}).constant.real();
            const double want = std::pow(1.7, power) * hurwitz_zeta_extended(power, a);
            worst = std::max(worst, std::abs(got - want) / std::max(1.0, std::abs(want)));
        }
    }
    return worst;
}

inline double gauge_rescaling()
{
    double worst = 0.0;
    for (double offset : {1.0, 0.5, -1.5, 2.25}) {
        for (int power = 0; power <= 1; ++power) {
            const GaugedSumSpec spec{SpectralFamily::ascending(2.0 * std::numbers::pi, offset),
                                     power};
            const Complex base = gauged_trace(spec).constant;
            for (double theta : {0.5, 2.0, 10.0}) {
                worst = std::max(worst, std::abs(rescale_gauge(spec, theta).constant - base));
            }
        }
    }
    return worst;
}

inline double quotient_scaling()
{
    double worst = 0.0;
    const LaurentValue num0 = LaurentValue::regular(Complex(-0.3, 1.1));
    const LaurentValue den0 = LaurentValue::regular(Complex(2.0, -0.7));
    const LaurentValue num1 = LaurentValue::simple_pole(Complex(2.0, 0.5), 7.0);
    const LaurentValue den1 = LaurentValue::simple_pole(Complex(4.0, -1.0), 1.0);
    for (Complex c : {Complex(3.0, 0.0), Complex(-0.25, 2.0), Complex(0.0, -1e3)}) {
        auto scale = [&](const LaurentValue& v) {
            return LaurentValue::make(v.pole_order, v.residue * c, v.constant * c);
        };
        worst = std::max(worst, rel(vev_quotient(scale(num0), scale(den0)).value,
                                    vev_quotient(num0, den0).value));
        worst = std::max(worst, rel(vev_quotient(scale(num1), scale(den1)).value,
                                    vev_quotient(num1, den1).value));
    }
    return worst;
}

inline FermionParams random_fermion(std::mt19937_64& rng)
{
    std::uniform_real_distribution<double> ux(0.3, 5.0);
    std::uniform_real_distribution<double> um(0.0, 2.0);
    std::uniform_real_distribution<double> uf(-20.0, 20.0);
    std::uniform_int_distribution<long> un(-6, 6);
    while (true) {
        FermionParams p;
        p.X = ux(rng);
        p.m = um(rng);
        p.flux = uf(rng);
        p.n_plus = un(rng);
        p.n_minus = un(rng);
        const auto near_int = [](double v) { return std::abs(v - std::round(v)) < 1e-6; };
        if (!near_int(0.5 + p.c_plus()) && !near_int(0.5 - p.c_minus())) {
            return p;
        }
    }
}

inline double fermion_closed_forms_random()
{
    std::mt19937_64 rng(1905);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const auto p = random_fermion(rng);
        const auto r = fermion_background_report(p);
        const auto c = fermion_closed_forms(p);
        const std::vector<std::pair<const char*, double>> want{
            {"Q_plus", c.q_plus}, {"Q_minus", c.q_minus}, {"H_plus", c.h_plus},
            {"H_minus", c.h_minus}, {"Q", c.q}, {"Q5", c.q5}, {"H_F", c.h_f}};
        for (const auto& [name, value] : want) {
            worst = std::max(worst,
                             std::abs(r.real(name) - value) / std::max(1.0, std::abs(value)));
        }
    }
    return worst;
}

inline double fermion_vacuum_point()
{
    const auto r = fermion_background_report({1.0, 0.0, 0.0, 0, 0});
    return std::abs(r.real("H_F") + std::numbers::pi / 6.0);
}

inline double fock_decay_slope()
{
    const auto r = real_scalar_report(1.0, default_time_grid(), 4);
    return std::abs(r.real("H_n_decay_exponent") + 1.0);
}

inline double leN_magnitude()
{
    double worst = 0.0;
    for (int n = 1; n <= 10; ++n) {
        for (double t : {1e2, 1e3, 1e6}) {
            const double got = std::abs(leN_ratio(n, 0.0, TimeParameter(t), 1.0));
            worst = std::max(worst, std::abs(got - n / t));
        }
    }
    return worst;
}

inline double leN_two_path()
{
    double worst = 0.0;
    for (int n = 1; n <= 6; ++n) {
        for (Complex z : {Complex(0.0), Complex(0.2), Complex(0.3, -0.4)}) {
            const TimeParameter t(100.0, 1e-3);
            worst = std::max(worst, rel(leN_ratio_gamma_quotient(n, z, t, 2.0),
                                        leN_ratio(n, z, t, 2.0)));
        }
    }
    return worst;
}

inline double halfline_vs_quadrature()
{
    std::vector<std::future<double>> parts;
    for (double lambda : {1.0, 2.0 * std::numbers::pi, 100.0}) {
        for (double s : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
            parts.push_back(std::async(std::launch::async, [lambda, s] {
                return rel(extrapolated_damped_quadrature(lambda, s),
                           halfline_regularized_integral(lambda, s));
            }));
        }
    }
    double worst = 0.0;
    for (auto& p : parts) {
        worst = std::max(worst, p.get());
    }
    return worst;
}

inline double dirac_residues()
{
    double worst = std::max(std::abs(dirac_residue_trace(1.0, 1).residue - 1.0),
                            std::abs(dirac_residue_trace(1.0, 3).residue +
                                     std::numbers::pi / 2.0));
    for (int n = 1; n <= 9; ++n) {
        if (dirac_residue_trace(1.0, n).pole_present != (n % 2 == 1)) {
            worst = 1.0;
        }
    }
    return worst;
}

}  // namespace checks

/// The cross-checks run by `verify`, with default-profile tolerances.
inline std::vector<Check> verification_catalog()
{
    return {
        {"gamma_recurrence", 1e-11, checks::gamma_recurrence},
        {"gamma_values", 1e-12, checks::gamma_values},
        {"hurwitz_recurrence", 1e-10, checks::hurwitz_recurrence},
        {"hurwitz_closed_forms", 1e-10, checks::hurwitz_closed_forms},
        {"hurwitz_extended_agreement", 1e-10, checks::hurwitz_extended_agreement},
        {"hurwitz_vs_partial_sums", 1.0, checks::hurwitz_partial_sums},
        {"bernoulli_identities", 0.0, checks::bernoulli_identities},
        {"binom_half_series", 1e-8, checks::binomial_series},
        {"casimir_spectral", 1e-12, checks::casimir_spectral},
        {"casimir_vs_smoothed_sum", 1e-5, checks::casimir_smoothed},
        {"trace_identity", 1e-12, checks::trace_identity_values},
        {"sign_split_continuation", 1e-10, checks::sign_split_continuation},
        {"gauge_rescaling", 1e-10, checks::gauge_rescaling},
        {"vev_quotient_scaling", 1e-12, checks::quotient_scaling},
        {"fermion_closed_forms", 1e-10, checks::fermion_closed_forms_random},
        {"fermion_vacuum_energy", 1e-12, checks::fermion_vacuum_point},
        {"fock_ratio_decay_slope", 0.02, checks::fock_decay_slope},
        {"leN_ratio_magnitude", 1e-12, checks::leN_magnitude},
        {"leN_ratio_two_path", 1e-12, checks::leN_two_path},
        {"halfline_vs_damped_quadrature", 1e-5, checks::halfline_vs_quadrature},
        {"dirac_residue", 1e-12, checks::dirac_residues},
    };
}

inline double profile_factor(Profile profile) { return profile == Profile::strict ? 0.1 : 1.0; }

/// Runs every check concurrently; results come back in catalog order.
inline std::vector<CheckResult> run_verification(Profile profile)
{
    const auto catalog = verification_catalog();
    std::vector<std::future<CheckResult>> pending;
    for (const auto& check : catalog) {
        pending.push_back(std::async(std::launch::async, [&check, profile] {
            const double tol = check.tolerance * profile_factor(profile);
            try {
                const double err = check.measure();
                return CheckResult{check.name, err, tol, std::isfinite(err) && err <= tol, {}};
            } catch (const std::exception& e) {
                return CheckResult{check.name, std::nan(""), tol, false, e.what()};
            }
        }));
    }
    std::vector<CheckResult> results;
    for (auto& p : pending) {
        results.push_back(p.get());
    }
    return results;
}

}  // namespace zetavev::cli

#endif  // ZETAVEV_CLI_VERIFICATION_HPP_
