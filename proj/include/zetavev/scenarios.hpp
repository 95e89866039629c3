#ifndef ZETAVEV_SCENARIOS_HPP_
#define ZETAVEV_SCENARIOS_HPP_

// The physical systems expressed through the spectral and oscillatory
// machinery: real and complex scalar fields on a circle, the Dirac residue
// trace, and a 1+1 dimensional fermion in a constant background field.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "zetavev/error.hpp"
#include "zetavev/oscillatory.hpp"
#include "zetavev/specfun.hpp"
#include "zetavev/spectral.hpp"

namespace zetavev {

enum class Provenance { closed_form, series_limit };

inline const char* to_string(Provenance p)
{
    return p == Provenance::closed_form ? "closed-form" : "series-limit";
}

struct VevEntry {
    std::string quantity;
    Complex value;
    QuotientMode mode = QuotientMode::constant_ratio;
    Provenance provenance = Provenance::closed_form;
};

/// Named quantities of one scenario evaluation, in insertion order.
class VevReport {
public:
    explicit VevReport(std::string scenario = {}) : scenario_(std::move(scenario)) {}

    const std::string& scenario() const noexcept { return scenario_; }
    const std::vector<VevEntry>& entries() const noexcept { return entries_; }
    const std::vector<std::string>& notes() const noexcept { return notes_; }

    void add(std::string quantity, Complex value,
             QuotientMode mode = QuotientMode::constant_ratio,
             Provenance provenance = Provenance::closed_form)
    {
        detail::require_finite(value, "report value");
        entries_.push_back({std::move(quantity), value, mode, provenance});
    }

    void note(std::string text) { notes_.push_back(std::move(text)); }

    bool contains(const std::string& quantity) const
    {
        return find(quantity) != nullptr;
    }

    const VevEntry& at(const std::string& quantity) const
    {
        if (const auto* e = find(quantity)) {
            return *e;
        }
        throw Error(ErrorKind::config, "report has no quantity '" + quantity + "'");
    }

    double real(const std::string& quantity) const { return at(quantity).value.real(); }

private:
    const VevEntry* find(const std::string& quantity) const
    {
        for (const auto& e : entries_) {
            if (e.quantity == quantity) {
                return &e;
            }
        }
        return nullptr;
    }

    std::string scenario_;
    std::vector<VevEntry> entries_;
    std::vector<std::string> notes_;
};

namespace detail {

inline void require_positive_x(double x)
{
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw Error(ErrorKind::nonpositive_argument, "circumference X must be > 0");
    }
}

// Momenta p in (2 pi / X) Z \ {0}: levels 2 pi k / X, k >= 1, twice each.
inline SpectralFamily momentum_family(double x)
{
    require_positive_x(x);
    return SpectralFamily::ascending(2.0 * std::numbers::pi / x, 1.0, 1, 2);
}

}  // namespace detail

/// Zero-point energy (1/2) sum_p E_p on a circle of circumference X.
inline double casimir_energy(double x)
{
    const GaugedSumSpec spec{detail::momentum_family(x), 1};
    return 0.5 * gauged_trace(spec).constant.real();
}

/// tr id = sum_p 1 over the nonzero momenta.
inline double trace_identity(double x)
{
    const GaugedSumSpec spec{detail::momentum_family(x), 0};
    return gauged_trace(spec).constant.real();
}

/// Power-law extrapolation |r(T)| ~ C T^p of a time series to T -> infinity.
struct SeriesLimit {
    double limit;
    double decay_exponent;
    double residual;  // |r| at the largest T
};

inline SeriesLimit extrapolate_infinite_time(
    const std::vector<TimeParameter>& grid,
    const std::function<Complex(const TimeParameter&)>& ratio)
{
    if (grid.size() < 2) {
        throw Error(ErrorKind::nonpositive_argument, "T grid needs at least two points");
    }
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if (!(grid[i].T > grid[i - 1].T)) {
            throw Error(ErrorKind::nonpositive_argument, "T grid must be ascending");
        }
    }
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double residual = 0.0;
    for (const auto& t : grid) {
        residual = std::abs(ratio(t));
        const double lx = std::log(t.T);
        const double ly = std::log(residual);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double n = static_cast<double>(grid.size());
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    if (!(slope < 0.0)) {
        throw Error(ErrorKind::no_decay,
                    "ratio does not decay in T (fitted exponent " + std::to_string(slope) + ")");
    }
    return {0.0, slope, residual};
}

inline std::vector<TimeParameter> default_time_grid(double damping = 0.0)
{
    return {TimeParameter(1e3, damping), TimeParameter(1e4, damping),
            TimeParameter(1e5, damping), TimeParameter(1e6, damping)};
}

inline VevReport real_scalar_report(double x, const std::vector<TimeParameter>& grid,
                                    int n_max = 4,
                                    PhaseConvention convention = PhaseConvention::standard)
{
    detail::require_positive_x(x);
    const FockRatioSpec spec{x, 0.0, n_max};
    const auto h_n = extrapolate_infinite_time(grid, [&](const TimeParameter& t) {
        return fock_ratio(spec, t, convention).value;
    });
    const double casimir = casimir_energy(x);

    VevReport report("real_scalar");
    report.add("H_n", h_n.limit, QuotientMode::constant_ratio, Provenance::series_limit);
    report.add("H_n_residual", h_n.residual, QuotientMode::constant_ratio,
               Provenance::series_limit);
    report.add("H_n_decay_exponent", h_n.decay_exponent, QuotientMode::constant_ratio,
               Provenance::series_limit);
    report.add("casimir", casimir);
    report.add("H_zeta", h_n.limit + casimir, QuotientMode::constant_ratio,
               Provenance::series_limit);
    return report;
}

/// Particle (b) and antiparticle (c) sector weights of the normally ordered
/// Hamiltonian sum_p E_p (b+b - c+c).
struct SectorWeights {
    int particle = 1;
    int antiparticle = -1;
};

inline VevReport complex_scalar_report(double x,
                                       const std::vector<TimeParameter>& grid = default_time_grid(),
                                       int n_max = 4,
                                       PhaseConvention convention = PhaseConvention::standard)
{
    detail::require_positive_x(x);
    const SectorWeights weights;
    // Both sectors have the degrees of homogeneity of the real field.
    const FockRatioSpec spec{x, 0.0, n_max};
    auto sector = [&](int weight) {
        return extrapolate_infinite_time(grid, [&](const TimeParameter& t) {
            return static_cast<double>(weight) * fock_ratio(spec, t, convention).value;
        });
    };
    const auto particle = sector(weights.particle);
    const auto antiparticle = sector(weights.antiparticle);

    VevReport report("complex_scalar");
    report.add("H_n", particle.limit + antiparticle.limit, QuotientMode::constant_ratio,
               Provenance::series_limit);
    report.add("H_n_particle", particle.limit, QuotientMode::constant_ratio,
               Provenance::series_limit);
    report.add("H_n_antiparticle", antiparticle.limit, QuotientMode::constant_ratio,
               Provenance::series_limit);
    report.add("H_n_decay_exponent", particle.decay_exponent, QuotientMode::constant_ratio,
               Provenance::series_limit);
    report.add("charge_shift", trace_identity(x));
    report.add("weight_b", weights.particle);
    report.add("weight_c", weights.antiparticle);
    report.note("antiparticles carry negative energy in the normally ordered Hamiltonian");
    return report;
}

struct DiracResidue {
    double residue;
    bool pole_present;
};

/// Residue trace of sqrt(|xi|^2 + m^2) on an N-torus: the homogeneity -N
/// term of the binomial expansion exists only for odd N.
inline DiracResidue dirac_residue_trace(double m, int n)
{
    if (!(m > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "mass must be > 0");
    }
    if (n < 1) {
        throw Error(ErrorKind::nonpositive_argument, "dimension must be >= 1");
    }
    if (n % 2 == 0) {
        return {0.0, false};
    }
    const int j = (n + 1) / 2;
    return {binom_half(j) * std::pow(m, n + 1) * sphere_area(n), true};
}

inline VevReport dirac_report(double m, int n)
{
    const auto r = dirac_residue_trace(m, n);
    VevReport report("dirac_residue");
    report.add("residue", r.residue, r.pole_present ? QuotientMode::residue_ratio
                                                    : QuotientMode::constant_ratio);
    report.add("pole_present", r.pole_present ? 1.0 : 0.0,
               r.pole_present ? QuotientMode::residue_ratio : QuotientMode::constant_ratio);
    return report;
}

/// Fermion on R / X Z with mass m, Wilson-line value flux = e * oint A and
/// filled-sea levels N+ (states n < N+) and N- (states n >= N-).
struct FermionParams {
    double X = 1.0;
    double m = 0.0;
    double flux = 0.0;
    long n_plus = 0;
    long n_minus = 0;

    double c_plus() const { return flux / (2.0 * std::numbers::pi) - m * X; }
    double c_minus() const { return flux / (2.0 * std::numbers::pi) + m * X; }

    void validate() const
    {
        detail::require_positive_x(X);
        if (!(m >= 0.0) || !std::isfinite(m) || !std::isfinite(flux)) {
            throw Error(ErrorKind::nonpositive_argument, "need finite m >= 0 and finite flux");
        }
    }
};

/// Filled levels of both chirality sectors. The minus sector fills n >= N-
/// of -eps_n^-, so its energy family carries weight -1 while its charge
/// family counts states with weight +1.
struct FermionFamilies {
    SpectralFamily plus;          // eps_n^+ over n < N+
    SpectralFamily minus_charge;  // eps_n^- over n >= N-
    SpectralFamily minus_energy;  // same levels, weight -1
};

inline FermionFamilies fermion_families(const FermionParams& p)
{
    p.validate();
    const double scale = 2.0 * std::numbers::pi / p.X;
    // eps_n^+ = scale (n + 1/2 - C+), filled for n < N+
    auto plus = SpectralFamily::descending(scale, 0.5 - p.c_plus(), p.n_plus);
    // eps_n^- = scale (n + 1/2 - C-), filled for n >= N-, energy -eps_n^-
    const double minus_offset = 0.5 - p.c_minus() + static_cast<double>(p.n_minus);
    auto minus_charge = SpectralFamily::ascending(scale, minus_offset, 1);
    auto minus_energy = SpectralFamily::ascending(scale, minus_offset, -1);
    if (plus.has_zero_mode() || minus_charge.has_zero_mode()) {
        throw Error(ErrorKind::zero_mode,
                    "a filled level has exactly zero energy (1/2 + C+ - N+ or "
                    "1/2 - C- + N- is a non-positive integer)");
    }
    return {plus, minus_charge, minus_energy};
}

struct FermionClosedForms {
    double q_plus, q_minus, h_plus, h_minus, q, q5, h_f;
};

inline FermionClosedForms fermion_closed_forms(const FermionParams& p)
{
    p.validate();
    const double np = static_cast<double>(p.n_plus);
    const double nm = static_cast<double>(p.n_minus);
    const double e = std::numbers::pi / p.X;
    FermionClosedForms c{};
    c.q_plus = np - p.c_plus();
    c.q_minus = p.c_minus() - nm;
    c.h_plus = e * ((p.c_plus() - np) * (p.c_plus() - np) - 1.0 / 12.0);
    c.h_minus = e * ((nm - p.c_minus()) * (nm - p.c_minus()) - 1.0 / 12.0);
    c.q = np - nm + 2.0 * p.m * p.X;
    c.q5 = np + nm - p.flux / std::numbers::pi;
    c.h_f = e * (c.q_plus * c.q_plus + c.q_minus * c.q_minus - 1.0 / 6.0);
    return c;
}

/// Charges and energies of the (N+, N-) vacuum, computed through the gauge
/// |H+|^z + |H-|^z and cross-checked against the closed forms.
inline VevReport fermion_background_report(const FermionParams& p)
{
    const auto families = fermion_families(p);
    const LaurentValue vacuum = LaurentValue::regular(1.0);
    auto vev = [&](const SpectralFamily& f, int power) {
        return vev_quotient(gauged_trace({f, power}), vacuum).value.real();
    };
    const double q_plus = vev(families.plus, 0);
    const double q_minus = vev(families.minus_charge, 0);
    const double h_plus = vev(families.plus, 1);
    const double h_minus = vev(families.minus_energy, 1);

    const auto closed = fermion_closed_forms(p);
    auto check = [](const char* name, double spectral, double expected) {
        if (std::abs(spectral - expected) > 1e-9 * std::max(1.0, std::abs(expected))) {
            throw Error(ErrorKind::internal_mismatch,
                        std::string(name) + ": spectral " + std::to_string(spectral) +
                            " vs closed form " + std::to_string(expected));
        }
    };
    check("Q_plus", q_plus, closed.q_plus);
    check("Q_minus", q_minus, closed.q_minus);
    check("H_plus", h_plus, closed.h_plus);
    check("H_minus", h_minus, closed.h_minus);

    VevReport report("fermion_background");
    report.add("Q_plus", q_plus);
    report.add("Q_minus", q_minus);
    report.add("Q", q_plus + q_minus);
    report.add("Q5", q_plus - q_minus);
    report.add("H_plus", h_plus);
    report.add("H_minus", h_minus);
    report.add("H_F", h_plus + h_minus);
    report.add("C_plus", p.c_plus());
    report.add("C_minus", p.c_minus());
    return report;
}

inline VevReport casimir_report(double x)
{
    VevReport report("casimir");
    report.add("casimir", casimir_energy(x));
    return report;
}

inline VevReport trace_identity_report(double x)
{
    VevReport report("trace_id");
    report.add("trace_id", trace_identity(x));
    return report;
}

}  // namespace zetavev

#endif  // ZETAVEV_SCENARIOS_HPP_
