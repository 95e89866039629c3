#ifndef ZETAVEV_ORACLE_HPP_
#define ZETAVEV_ORACLE_HPP_

// Brute-force reference values that do not go through any analytic
// continuation: heat-kernel smoothed sums with a fitted divergent part,
// damped quadrature of oscillatory integrals, and plain partial sums.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss.hpp>

#include "zetavev/error.hpp"
#include "zetavev/spectral.hpp"

namespace zetavev {

struct SmoothingSchedule {
    /// Strictly descending, positive cutoffs delta.
    std::vector<double> cutoffs;
    /// Number of divergent powers delta^{-1} .. delta^{-fit_degree} fitted.
    int fit_degree = 2;
    /// Number of regular powers delta^1 .. delta^{regular_terms} fitted.
    int regular_terms = 10;

    static constexpr std::size_t min_points = 8;
    static constexpr double min_span = 100.0;

    /// `points` cutoffs spaced geometrically from delta_max down by `decades`.
    static SmoothingSchedule geometric(double delta_max, double decades, int points,
                                       int fit_degree, int regular_terms = 10)
    {
        SmoothingSchedule schedule;
        schedule.fit_degree = fit_degree;
        schedule.regular_terms = regular_terms;
        for (int i = 0; i < points; ++i) {
            const double t = points == 1 ? 0.0 : static_cast<double>(i) / (points - 1);
            schedule.cutoffs.push_back(delta_max * std::pow(10.0, -decades * t));
        }
        return schedule;
    }

    /// Two decades below delta = 1 / scale, which keeps every cutoff inside
    /// the convergence disc |delta * scale| < 2 pi of the small-delta series.
    static SmoothingSchedule for_family(const SpectralFamily& family, int fit_degree)
    {
        return geometric(1.0 / family.scale(), 2.0, 24, fit_degree);
    }

    void validate() const
    {
        if (cutoffs.size() < min_points) {
            throw Error(ErrorKind::ill_conditioned_fit, "need at least 8 cutoffs");
        }
        for (std::size_t i = 0; i < cutoffs.size(); ++i) {
            if (!(cutoffs[i] > 0.0)) {
                throw Error(ErrorKind::nonpositive_argument, "cutoffs must be positive");
            }
            if (i > 0 && !(cutoffs[i] < cutoffs[i - 1])) {
                throw Error(ErrorKind::ill_conditioned_fit, "cutoffs must strictly descend");
            }
        }
        if (cutoffs.front() / cutoffs.back() < min_span * (1.0 - 1e-12)) {
            throw Error(ErrorKind::ill_conditioned_fit, "cutoffs span less than two decades");
        }
        if (fit_degree < 0 || regular_terms < 0) {
            throw Error(ErrorKind::ill_conditioned_fit, "negative fit degree");
        }
        const auto unknowns = static_cast<std::size_t>(fit_degree + regular_terms + 1);
        if (cutoffs.size() < unknowns) {
            throw Error(ErrorKind::ill_conditioned_fit, "fewer cutoffs than fit coefficients");
        }
    }
};

/// S(delta) = sum_n weight * mult * eps_n^power * exp(-delta |eps_n|).
inline double smoothed_sum(const SpectralFamily& family, int power, double delta)
{
    long double acc = 0.0L;
    const long double cutoff_exponent = 46.0L;
    for (long n = 0;; ++n) {
        const long double eps = family.eigenvalue(n);
        const long double magnitude = std::abs(eps);
        const long double x = delta * magnitude;
        if (x > cutoff_exponent && static_cast<double>(n) + family.offset() > 0.0) {
            break;
        }
        acc += (power == 0 ? 1.0L : eps) * std::exp(-x);
    }
    return static_cast<double>(family.weight() * family.multiplicity() * acc);
}

/// Finite part c_0 of S(delta) ~ sum_j c_j delta^{-j} + c_0 + O(delta), from
/// a least-squares fit of delta^d S(delta) by a polynomial in delta.
inline double smoothed_sum_finite_part(const SpectralFamily& family, int power,
                                       const SmoothingSchedule& schedule)
{
    detail::check_power(power);
    schedule.validate();
    if (family.has_zero_mode() && power == 0) {
        throw Error(ErrorKind::zero_mode, "zero mode in a charge sum");
    }
    const int d = schedule.fit_degree;
    const int degree = d + schedule.regular_terms;
    const double top = schedule.cutoffs.front();
    const auto rows = static_cast<Eigen::Index>(schedule.cutoffs.size());

    Eigen::MatrixXd design(rows, degree + 1);
    Eigen::VectorXd rhs(rows);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const double delta = schedule.cutoffs[static_cast<std::size_t>(i)];
        const double t = delta / top;
        double p = 1.0;
        for (int j = 0; j <= degree; ++j) {
            design(i, j) = p;
            p *= t;
        }
        rhs(i) = std::pow(delta, d) * smoothed_sum(family, power, delta);
    }
    const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(rhs);
    return detail::require_finite(coeffs(d) / std::pow(top, d), "smoothed_sum_finite_part");
}

namespace detail {

using LongComplex = std::complex<long double>;
using GaussRule = boost::math::quadrature::gauss<long double, 20>;

template <class F>
LongComplex gauss_panel(F&& f, long double lo, long double hi)
{
    const long double mid = 0.5L * (lo + hi);
    const long double half = 0.5L * (hi - lo);
    const auto& x = GaussRule::abscissa();
    const auto& w = GaussRule::weights();
    LongComplex acc = 0.0L;
    for (std::size_t i = 0; i < x.size(); ++i) {
        acc += w[i] * (f(mid - half * x[i]) + f(mid + half * x[i]));
    }
    return half * acc;
}

}  // namespace detail

/// int_0^{r_max} exp((i - eta) lambda r) r^s dr by composite Gauss-Legendre.
/// With u = lambda r the panels are [k pi, (k+1) pi], where e^{iu} is an exact
/// sign times a node phase, so no large-argument exponential is evaluated.
/// The r^s endpoint singularity is handled by geometric grading.
inline Complex damped_quadrature(double lambda, Complex s, double eta, double r_max)
{
    if (!(lambda > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "lambda must be > 0");
    }
    if (!(eta > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "eta must be > 0");
    }
    if (!(s.real() > -1.0)) {
        throw Error(ErrorKind::nonpositive_argument, "integrand not integrable at 0");
    }
    if (eta * lambda * r_max < 30.0) {
        throw Error(ErrorKind::tail_not_negligible,
                    "eta * lambda * r_max must be >= 30 for a negligible tail");
    }
    using detail::LongComplex;
    constexpr long double pi = std::numbers::pi_v<long double>;
    const LongComplex sl(s.real(), s.imag());
    const long double damping = eta;
    const long double u_max = static_cast<long double>(lambda) * r_max;

    // u^s e^{(i - eta) u} on [0, pi]
    auto head = [&](long double u) {
        return std::exp(LongComplex(-damping * u, u) + sl * std::log(u));
    };
    constexpr int grading = 64;
    LongComplex acc = 0.0L;
    long double hi = std::min(pi, u_max);
    for (int j = 0; j < grading; ++j) {
        const long double lo = 0.5L * hi;
        acc += detail::gauss_panel(head, lo, hi);
        hi = lo;
    }
    const LongComplex sliver = std::exp((sl + 1.0L) * std::log(hi));
    acc += sliver / (sl + 1.0L) + LongComplex(-damping, 1.0L) * sliver * hi / (sl + 2.0L);

    const auto& x = detail::GaussRule::abscissa();
    const auto& w = detail::GaussRule::weights();
    const bool real_exponent = s.imag() == 0.0;
    std::vector<LongComplex> phase;  // e^{iv} at the nodes of a full panel
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (const long double v : {0.5L * pi * (1.0L - x[i]), 0.5L * pi * (1.0L + x[i])}) {
            phase.emplace_back(std::cos(v), std::sin(v));
        }
    }
    const long double sigma = s.real();
    const auto panels = static_cast<long>(std::ceil(u_max / pi));
    for (long k = 1; k < panels; ++k) {
        const long double start = static_cast<long double>(k) * pi;
        const long double width = std::min(pi, u_max - start);
        const long double mid = 0.5L * width;
        LongComplex panel = 0.0L;
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (const long double v : {mid - mid * x[i], mid + mid * x[i]}) {
                const long double u = start + v;
                if (real_exponent && width == pi) {
                    const long double modulus = std::exp(-damping * u + sigma * std::log(u));
                    panel += w[i] * modulus * phase[v < mid ? 2 * i : 2 * i + 1];
                } else {
                    panel += w[i] * std::exp(LongComplex(-damping * u, v) + sl * std::log(u));
                }
            }
        }
        panel *= mid;
        acc += (k % 2 == 0) ? panel : -panel;  // e^{i k pi}
    }
    acc *= std::exp(-(sl + 1.0L) * std::log(static_cast<long double>(lambda)));
    return detail::require_finite(
        Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag())),
        "damped_quadrature");
}

/// Truncation point with |int_{r_max}^inf| below 1e-17 of the integral:
/// eta lambda r_max = R where R - Re(s) ln R >= 39 + (Re(s) + 1) ln(1/eta).
inline double damped_quadrature_cutoff(double lambda, Complex s, double eta)
{
    const double sigma = std::max(0.0, s.real());
    const double need = 39.0 + (sigma + 1.0) * std::log(1.0 / eta);
    double big_r = std::max(30.0, need);
    for (int i = 0; i < 50 && big_r - sigma * std::log(big_r) < need; ++i) {
        big_r = need + sigma * std::log(big_r);
    }
    return big_r / (eta * lambda);
}

/// Damped quadrature at each eta followed by polynomial (Neville)
/// extrapolation to eta = 0.
inline Complex extrapolated_damped_quadrature(double lambda, Complex s,
                                              const std::vector<double>& etas = {1e-2, 1e-3, 1e-4})
{
    if (etas.empty()) {
        throw Error(ErrorKind::nonpositive_argument, "need at least one damping value");
    }
    std::vector<Complex> table;
    for (double eta : etas) {
        table.push_back(damped_quadrature(lambda, s, eta,
                                          damped_quadrature_cutoff(lambda, s, eta)));
    }
    const std::size_t n = etas.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double a = etas[i];
            const double b = etas[i + level];
            // value at 0 of the line through (a, table[i]) and (b, table[i+1])
            table[i] = (b * table[i] - a * table[i + 1]) / (b - a);
        }
    }
    return table.front();
}

struct PartialSumReference {
    Complex value;
    double bound;
};

/// sum_{n < terms} (n + a)^{-s} plus the midpoint-rule integral of the tail.
inline PartialSumReference partial_sum_reference(Complex s, double a, long terms)
{
    if (!(s.real() > 1.5)) {
        throw Error(ErrorKind::nonpositive_argument, "partial sums need Re s > 1.5");
    }
    if (!(a > 0.0) || terms < 1) {
        throw Error(ErrorKind::nonpositive_argument, "need a > 0 and terms >= 1");
    }
    using detail::LongComplex;
    const LongComplex sl(s.real(), s.imag());
    LongComplex acc = 0.0L;
    for (long n = terms - 1; n >= 0; --n) {
        acc += std::exp(-sl * std::log(static_cast<long double>(n) + a));
    }
    const long double m = static_cast<long double>(terms) + a - 0.5L;
    acc += std::exp((1.0L - sl) * std::log(m)) / (sl - 1.0L);
    const double sigma = s.real();
    const double bound = 2.0 * std::abs(s * (s + 1.0)) / (24.0 * (sigma + 1.0)) *
                         std::pow(static_cast<double>(m), -sigma - 1.0);
    return {Complex(static_cast<double>(acc.real()), static_cast<double>(acc.imag())),
            bound + 1e-15 * std::abs(Complex(static_cast<double>(acc.real()),
                                             static_cast<double>(acc.imag())))};
}

}  // namespace zetavev

#endif  // ZETAVEV_ORACLE_HPP_
