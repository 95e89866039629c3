#ifndef ZETAVEV_OSCILLATORY_HPP_
#define ZETAVEV_OSCILLATORY_HPP_

// Half-line oscillatory integrals in Gamma-function form and the regulated
// Fock-space ratios built from them.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

#include "zetavev/error.hpp"
#include "zetavev/specfun.hpp"

namespace zetavev {

/// Time horizon T with the i0+ prescription realised as a frequency
/// lambda -> lambda (1 + i damping).
struct TimeParameter {
    double T;
    double damping = 0.0;

    TimeParameter(double t, double eta = 0.0) : T(t), damping(eta)
    {
        if (!(t > 0.0) || !std::isfinite(t)) {
            throw Error(ErrorKind::nonpositive_argument, "T must be > 0");
        }
        if (!(eta >= 0.0)) {
            throw Error(ErrorKind::nonpositive_argument, "damping must be >= 0");
        }
    }
};

struct FockRatioSpec {
    double X = 1.0;
    Complex z = 0.0;
    int n_max = 4;
};

/// Base of the powers produced by int_0^inf e^{i lambda r} r^s dr.
/// `standard` is the principal-branch evaluation (-i lambda); `plus_i` keeps
/// +i lambda. Ratios of such powers do not depend on the choice.
enum class PhaseConvention { standard, plus_i };

namespace detail {

inline Complex oscillation_base(double lambda, double damping, PhaseConvention convention)
{
    const Complex effective = lambda * Complex(1.0, damping);
    const Complex i(0.0, 1.0);
    return convention == PhaseConvention::standard ? -i * effective : i * effective;
}

inline void check_gamma_argument(Complex w, const char* where)
{
    if (detail::is_nonpositive_integer(w)) {
        throw Error(ErrorKind::pole, where);
    }
}

}  // namespace detail

/// int_0^inf e^{i lambda r} r^s dr = Gamma(s + 1) (-i lambda)^{-(s + 1)},
/// understood as the Abel limit of the damped integral.
inline Complex halfline_regularized_integral(double lambda, Complex s)
{
    if (!(lambda > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "lambda must be > 0");
    }
    detail::check_gamma_argument(s + 1.0, "halfline integral: Gamma pole at s + 1");
    const Complex base = detail::oscillation_base(lambda, 0.0, PhaseConvention::standard);
    return detail::require_finite(gamma(s + 1.0) * std::exp(-(s + 1.0) * std::log(base)),
                                  "halfline_regularized_integral");
}

/// log of alpha_N^z = Gamma(z+N+1)^{-1} Gamma(z+N)^{-N} b^{Nz} N^z V_N^{Nz},
/// b = i 2 pi T / X (or -i ... under the standard convention).
inline Complex log_alpha_regulator(int n, Complex z, const TimeParameter& time, double X,
                                   PhaseConvention convention = PhaseConvention::standard)
{
    if (n < 1) {
        throw Error(ErrorKind::nonpositive_argument, "N must be >= 1");
    }
    if (!(X > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "X must be > 0");
    }
    const double nd = n;
    detail::check_gamma_argument(z + nd, "alpha regulator: Gamma pole");
    const Complex base = detail::oscillation_base(2.0 * std::numbers::pi * time.T / X,
                                                  time.damping, convention);
    return -log_gamma(z + nd + 1.0) - nd * log_gamma(z + nd) +
           nd * z * std::log(base) + z * std::log(nd) +
           nd * z * std::log(sphere_area(n));
}

inline Complex alpha_regulator(int n, Complex z, const TimeParameter& time, double X,
                               PhaseConvention convention = PhaseConvention::standard)
{
    return detail::require_finite(std::exp(log_alpha_regulator(n, z, time, X, convention)),
                                  "alpha_regulator");
}

/// alpha_N^z / alpha_N^0: the z-dependent part of the regulator, equal to 1
/// at z = 0 for every N.
inline Complex alpha_regulator_normalized(int n, Complex z, const TimeParameter& time,
                                          double X,
                                          PhaseConvention convention = PhaseConvention::standard)
{
    return detail::require_finite(
        std::exp(log_alpha_regulator(n, z, time, X, convention) -
                 log_alpha_regulator(n, 0.0, time, X, convention)),
        "alpha_regulator_normalized");
}

struct FockRatio {
    Complex value;
    /// Bound on the change of `value` from the terms beyond n_max.
    double truncation_bound;
};

namespace detail {

struct FockTerms {
    std::vector<Complex> log_num;
    std::vector<Complex> log_den;
};

// Regulated series terms for N = 1 .. count:
//   num_N = (2 pi / X) N^{1+z} V_N^{N(1+z)} Gamma(z+N)^{-1}   b^{-N^2-1}
//   den_N =            N^{1+z} V_N^{N(1+z)} Gamma(z+N+1)^{-1} b^{-N^2}
inline FockTerms fock_terms(const FockRatioSpec& spec, const TimeParameter& time,
                            PhaseConvention convention, int count)
{
    const Complex base = oscillation_base(2.0 * std::numbers::pi * time.T / spec.X,
                                          time.damping, convention);
    const Complex log_base = std::log(base);
    const double log_energy = std::log(2.0 * std::numbers::pi / spec.X);
    FockTerms terms;
    for (int n = 1; n <= count; ++n) {
        const double nd = n;
        check_gamma_argument(spec.z + nd, "fock_ratio: Gamma pole");
        const Complex common =
            (1.0 + spec.z) * std::log(nd) + nd * (1.0 + spec.z) * std::log(sphere_area(n));
        terms.log_num.push_back(log_energy + common - log_gamma(spec.z + nd) +
                                (-nd * nd - 1.0) * log_base);
        terms.log_den.push_back(common - log_gamma(spec.z + nd + 1.0) +
                                (-nd * nd) * log_base);
    }
    return terms;
}

}  // namespace detail

/// Truncated regulated quotient of the Fock-space series for <H_n>; decays
/// like 1/T. Terms are combined in log space because b^{-N^2} underflows.
inline FockRatio fock_ratio(const FockRatioSpec& spec, const TimeParameter& time,
                            PhaseConvention convention = PhaseConvention::standard)
{
    if (!(spec.X > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "X must be > 0");
    }
    if (spec.n_max < 1) {
        throw Error(ErrorKind::nonpositive_argument, "n_max must be >= 1");
    }
    const auto terms = detail::fock_terms(spec, time, convention, spec.n_max + 1);

    double scale = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < spec.n_max; ++i) {
        scale = std::max(scale, terms.log_den[static_cast<std::size_t>(i)].real());
    }
    Complex num = 0.0;
    Complex den = 0.0;
    for (int i = 0; i < spec.n_max; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        num += std::exp(terms.log_num[idx] - scale);
        den += std::exp(terms.log_den[idx] - scale);
    }
    if (den == Complex(0.0) || !std::isfinite(std::abs(den))) {
        throw Error(ErrorKind::denominator_underflow, "all retained denominator terms vanish");
    }
    const Complex value = num / den;
    const auto next = static_cast<std::size_t>(spec.n_max);
    const double next_num = std::exp(terms.log_num[next].real() - scale);
    const double next_den = std::exp(terms.log_den[next].real() - scale);
    // The terms fall off like |b|^{-2N-1}, so twice the first omitted
    // contribution bounds the whole tail.
    const double bound = 2.0 * (next_num + std::abs(value) * next_den) / std::abs(den);
    return {detail::require_finite(value, "fock_ratio"), bound};
}

/// Ratio for the up-to-N-particle Hamiltonian, simplified:
/// (2 pi / X) (z + N) b^{-1}.
inline Complex leN_ratio(int n, Complex z, const TimeParameter& time, double X,
                         PhaseConvention convention = PhaseConvention::standard)
{
    if (n < 1) {
        throw Error(ErrorKind::nonpositive_argument, "N must be >= 1");
    }
    if (!(X > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "X must be > 0");
    }
    const double nd = n;
    detail::check_gamma_argument(z + nd, "leN_ratio: Gamma pole");
    const Complex base = detail::oscillation_base(2.0 * std::numbers::pi * time.T / X,
                                                  time.damping, convention);
    return detail::require_finite(2.0 * std::numbers::pi / X * (z + nd) / base, "leN_ratio");
}

/// The same ratio from the unsimplified Gamma quotient
/// (2 pi / X) Gamma(z+N+1) Gamma(z+N)^{N-1} b^{-Nz-N^2-1} / (Gamma(z+N)^N b^{-Nz-N^2}).
inline Complex leN_ratio_gamma_quotient(int n, Complex z, const TimeParameter& time, double X,
                                        PhaseConvention convention = PhaseConvention::standard)
{
    if (n < 1) {
        throw Error(ErrorKind::nonpositive_argument, "N must be >= 1");
    }
    if (!(X > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "X must be > 0");
    }
    const double nd = n;
    detail::check_gamma_argument(z + nd, "leN_ratio: Gamma pole");
    const Complex log_base = std::log(detail::oscillation_base(
        2.0 * std::numbers::pi * time.T / X, time.damping, convention));
    const Complex lg = log_gamma(z + nd);
    const Complex log_num = std::log(2.0 * std::numbers::pi / X) + log_gamma(z + nd + 1.0) +
                            (nd - 1.0) * lg + (-nd * z - nd * nd - 1.0) * log_base;
    const Complex log_den = nd * lg + (-nd * z - nd * nd) * log_base;
    return detail::require_finite(std::exp(log_num - log_den), "leN_ratio_gamma_quotient");
}

}  // namespace zetavev

#endif  // ZETAVEV_OSCILLATORY_HPP_
