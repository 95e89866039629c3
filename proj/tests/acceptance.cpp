// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "zetavev/oracle.hpp"
#include "zetavev/oscillatory.hpp"
#include "zetavev/scenarios.hpp"
#include "zetavev/specfun.hpp"
#include "zetavev/spectral.hpp"

using namespace zetavev;

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v)
{
    std::array<char, 32> buf{};
    std::snprintf(buf.data(), buf.size(), "%.3g", v);
    return buf.data();
}

struct Worst {
    double value = 0.0;
    void update(double v) { value = std::isnan(v) ? INFINITY : std::max(value, v); }
};

struct Process {
    int status;
    std::string out;
};

Process run(const std::string& cmd)
{
    FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) {
        return {-1, {}};
    }
    std::string out;
    std::array<char, 4096> buf{};
    while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) {
        out.append(buf.data(), n);
    }
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome casimir_constant()
{
    Worst spectral, oracle;
    for (double x : {0.5, 1.0, 2.0, 10.0}) {
        const double want = -pi / (6.0 * x);
        spectral.update(std::abs(casimir_energy(x) - want));
        const auto family = SpectralFamily::ascending(2.0 * pi / x, 1.0, 1, 2);
        oracle.update(std::abs(
            0.5 * smoothed_sum_finite_part(family, 1, SmoothingSchedule::for_family(family, 2)) -
            want));
    }
    return {spectral.value <= 1e-12 && oracle.value <= 1e-5,
            "spectral err " + fmt(spectral.value) + ", oracle err " + fmt(oracle.value)};
}

Outcome hurwitz_values()
{
    Worst w;
    for (int i = 1; i <= 50; ++i) {
        const double a = 10.0 * i / 50.0;
        w.update(std::abs(hurwitz_zeta(0.0, a) - (0.5 - a)));
        w.update(std::abs(hurwitz_zeta(-1.0, a) + 0.5 * ((a - 0.5) * (a - 0.5) - 1.0 / 12.0)));
    }
    return {w.value <= 1e-10, "max err " + fmt(w.value)};
}

Outcome identity_trace()
{
    Worst w;
    for (double x : {0.5, 1.0, 2.0, 7.3, 100.0}) {
        w.update(std::abs(trace_identity(x) + 1.0));
    }
    return {w.value <= 1e-12, "max err " + fmt(w.value)};
}

Outcome fermion_closed_forms_random()
{
    std::mt19937_64 rng(20251016);
    std::uniform_real_distribution<double> ux(0.2, 6.0);
    std::uniform_real_distribution<double> um(0.0, 2.5);
    std::uniform_real_distribution<double> uf(-25.0, 25.0);
    std::uniform_int_distribution<long> un(-7, 7);
    auto near_int = [](double v) { return std::abs(v - std::round(v)) < 1e-6; };
    Worst sectors, combined;
    int sets = 0;
    while (sets < 200) {
        const FermionParams p{ux(rng), um(rng), uf(rng), un(rng), un(rng)};
        if (near_int(0.5 + p.c_plus()) || near_int(0.5 - p.c_minus())) {
            continue;
        }
        ++sets;
        const auto r = fermion_background_report(p);
        const auto c = fermion_closed_forms(p);
        auto rel = [](double got, double want) {
            return std::abs(got - want) / std::max(1.0, std::abs(want));
        };
        sectors.update(rel(r.real("Q_plus"), c.q_plus));
        sectors.update(rel(r.real("Q_minus"), c.q_minus));
        sectors.update(rel(r.real("H_plus"), c.h_plus));
        sectors.update(rel(r.real("H_minus"), c.h_minus));
        const double qp = r.real("Q_plus");
        const double qm = r.real("Q_minus");
        combined.update(rel(r.real("Q"), p.n_plus - p.n_minus + 2.0 * p.m * p.X));
        combined.update(rel(r.real("Q5"), p.n_plus + p.n_minus - p.flux / pi));
        combined.update(rel(r.real("H_F"), pi / p.X * (qp * qp + qm * qm - 1.0 / 6.0)));
    }
    return {sectors.value <= 1e-10 && combined.value <= 1e-10,
            "200 sets, sector err " + fmt(sectors.value) + ", identity err " +
                fmt(combined.value)};
}

Outcome fermion_point()
{
    const auto r = fermion_background_report({1.0, 0.0, 0.0, 0, 0});
    const double err = std::abs(r.real("H_F") + pi / 6.0);
    return {err <= 1e-12, "H_F = " + fmt(r.real("H_F")) + ", err " + fmt(err)};
}

Outcome fock_decay()
{
    std::vector<double> xs, ys;
    for (double t : {1e3, 1e4, 1e5, 1e6}) {
        xs.push_back(std::log(t));
        ys.push_back(std::log(std::abs(fock_ratio({1.0, 0.0, 4}, TimeParameter(t)).value)));
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    const double slope = (4.0 * sxy - sx * sy) / (4.0 * sxx - sx * sx);
    Worst le;
    for (int n = 1; n <= 10; ++n) {
        for (double t : {1e2, 1e3, 1e4, 1e6}) {
            le.update(std::abs(std::abs(leN_ratio(n, 0.0, TimeParameter(t), 1.0)) - n / t));
        }
    }
    return {std::abs(slope + 1.0) <= 0.02 && le.value <= 1e-12,
            "slope " + fmt(slope) + ", leN err " + fmt(le.value)};
}

Outcome oscillatory_identities()
{
    Worst w;
    for (double lambda : {1.0, 2.0 * pi, 100.0}) {
        for (double s : {-0.5, 0.0, 0.5, 1.0, 2.0}) {
            const Complex exact = halfline_regularized_integral(lambda, s);
            const Complex oracle = extrapolated_damped_quadrature(lambda, s);
            w.update(std::abs(oracle - exact) / std::abs(exact));
        }
    }
    return {w.value <= 1e-5, "max rel err " + fmt(w.value)};
}

Outcome dirac_residue()
{
    const double e1 = std::abs(dirac_residue_trace(1.0, 1).residue - 1.0);
    const double e3 = std::abs(dirac_residue_trace(1.0, 3).residue + pi / 2.0);
    bool parity = true;
    for (int n = 1; n <= 9; ++n) {
        parity = parity && dirac_residue_trace(1.0, n).pole_present == (n % 2 == 1);
    }
    return {e1 <= 1e-12 && e3 <= 1e-12 && parity,
            "err N=1 " + fmt(e1) + ", N=3 " + fmt(e3) + (parity ? ", parity ok" : ", parity wrong")};
}

Outcome property_suites()
{
    int failures = 0;
    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> u10(-10.0, 10.0);
    std::uniform_real_distribution<double> ua(0.1, 10.0);

    for (int i = 0; i < 1000; ++i) {
        const Complex z(u10(rng), u10(rng));
        const Complex lhs = gamma(z + 1.0);
        failures += std::abs(lhs - z * gamma(z)) <= 1e-11 * std::abs(lhs) ? 0 : 1;
    }
    for (int i = 0; i < 500; ++i) {
        const Complex s(u10(rng), u10(rng));
        const double a = ua(rng);
        const Complex z0 = hurwitz_zeta(s, a);
        const Complex z1 = hurwitz_zeta(s, a + 1.0);
        const Complex power = std::exp(-s * std::log(a));
        const double scale = std::max({std::abs(z0), std::abs(z1), std::abs(power)});
        failures += std::abs(z0 - z1 - power) <= 1e-10 * scale ? 0 : 1;
    }
    const auto& table = BernoulliTable::instance();
    failures += table.polynomial(0) == std::vector<Rational>{Rational(1)} ? 0 : 1;
    for (int n = 1; n <= BernoulliTable::max_degree; ++n) {
        const auto& p = table.polynomial(n);
        const auto& q = table.polynomial(n - 1);
        Rational integral = 0;
        for (std::size_t j = 0; j < p.size(); ++j) {
            integral += p[j] / Rational(static_cast<long>(j + 1));
            if (j > 0) {
                failures += Rational(static_cast<long>(j)) * p[j] == Rational(n) * q[j - 1] ? 0 : 1;
            }
        }
        failures += integral == 0 ? 0 : 1;
    }
    std::uniform_real_distribution<double> u5(-5.0, 5.0);
    for (int i = 0; i < 300; ++i) {
        const auto f = SpectralFamily::ascending(1.0, u5(rng));
        if (f.has_zero_mode()) {
            continue;
        }
        for (int k = 0; k <= 1; ++k) {
            const double want = hurwitz_zeta_extended(k, f.offset());
            const double got = gauged_trace({f, k}).constant.real();
            failures += std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)) ? 0 : 1;
            const double theta = std::pow(10.0, u5(rng) / 2.5);
            const Complex scaled = rescale_gauge(GaugedSumSpec{f, k}, theta).constant;
            failures += std::abs(scaled - got) <= 1e-10 * std::max(1.0, std::abs(got)) ? 0 : 1;
        }
    }
    for (int i = 0; i < 200; ++i) {
        const Complex c(u10(rng), u10(rng));
        const Complex n(u10(rng), u10(rng));
        const Complex d(u10(rng), u10(rng));
        for (int order = 0; order <= 1; ++order) {
            const auto num = LaurentValue::make(order, order ? n : 0.0, order ? 1.0 : n);
            const auto den = LaurentValue::make(order, order ? d : 0.0, order ? 2.0 : d);
            const Complex base = vev_quotient(num, den).value;
            const Complex scaled =
                vev_quotient(LaurentValue::make(order, num.residue * c, num.constant * c),
                             LaurentValue::make(order, den.residue * c, den.constant * c))
                    .value;
            failures += std::abs(scaled - base) <= 1e-12 * std::abs(base) ? 0 : 1;
        }
    }
    return {failures == 0, std::to_string(failures) + " failures"};
}

Outcome cli_determinism()
{
    const std::string cli = ZETAVEV_CLI_PATH;
    const std::string faulty = ZETAVEV_FAULTY_CLI_PATH;
    const std::string cfg = std::string(ZETAVEV_CONFIG_DIR) + "/fermion_vacuum.cfg";
    const auto a = run(cli + " compute " + cfg);
    const auto b = run(cli + " compute " + cfg);
    const bool identical = a.status == 0 && !a.out.empty() && a.out == b.out;
    const auto good = run(cli + " verify");
    const auto bad = run(faulty + " verify");
    const bool gamma_flagged = bad.out.find("FAIL  gamma_recurrence") != std::string::npos;
    return {identical && good.status == 0 && bad.status == 1 && gamma_flagged,
            std::string(identical ? "identical records" : "records differ") +
                ", verify exit " + std::to_string(good.status) + ", faulty verify exit " +
                std::to_string(bad.status) +
                (gamma_flagged ? " (gamma_recurrence FAIL)" : " (gamma_recurrence not flagged)")};
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"casimir constant", casimir_constant},
        {"hurwitz values", hurwitz_values},
        {"identity trace", identity_trace},
        {"fermion closed forms", fermion_closed_forms_random},
        {"fermion vacuum point", fermion_point},
        {"fock ratio decay", fock_decay},
        {"oscillatory integral identities", oscillatory_identities},
        {"dirac residue", dirac_residue},
        {"property suites", property_suites},
        {"cli determinism", cli_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failed += o.pass ? 0 : 1;
        std::printf("%s  criterion %zu: %s  (%s)\n", o.pass ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
                criteria.size());
    return failed == 0 ? 0 : 1;
}
