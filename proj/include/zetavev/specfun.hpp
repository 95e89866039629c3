#ifndef ZETAVEV_SPECFUN_HPP_
#define ZETAVEV_SPECFUN_HPP_

// Complex Gamma, Bernoulli polynomials (exact rationals) and the Hurwitz
// zeta function with its polynomial continuation to non-positive a.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zetavev/error.hpp"

namespace zetavev {

using Rational = boost::multiprecision::cpp_rational;

/// Exact coefficient lists of B_0 .. B_{max_degree}; coefficients[n][j] is
/// the coefficient of x^j in B_n(x). Built once, read-only afterwards.
class BernoulliTable {
public:
    static constexpr int max_degree = 32;

    static const BernoulliTable& instance()
    {
        static const BernoulliTable table;
        return table;
    }

    const std::vector<Rational>& polynomial(int n) const
    {
        check_degree(n);
        return coefficients_[static_cast<std::size_t>(n)];
    }

    /// B_n = B_n(0), with the B_1 = -1/2 convention.
    const Rational& number(int n) const
    {
        check_degree(n);
        return numbers_[static_cast<std::size_t>(n)];
    }

    double number_as_double(int n) const
    {
        return number(n).convert_to<double>();
    }

    static void check_degree(int n)
    {
        if (n < 0 || n > max_degree) {
            throw Error(ErrorKind::degree_exceeds_table,
                        "Bernoulli degree " + std::to_string(n) +
                            " outside [0, " + std::to_string(max_degree) + "]");
        }
    }

private:
    BernoulliTable()
    {
        using boost::multiprecision::cpp_int;
        constexpr auto size = static_cast<std::size_t>(max_degree + 1);

        // Pascal rows up to max_degree + 1.
        std::vector<std::vector<cpp_int>> binom(size + 1);
        for (std::size_t n = 0; n <= size; ++n) {
            binom[n].assign(n + 1, cpp_int(1));
            for (std::size_t k = 1; k < n; ++k) {
                binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
            }
        }

        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        numbers_.assign(size, Rational(0));
        numbers_[0] = 1;
        for (std::size_t m = 1; m < size; ++m) {
            Rational acc = 0;
            for (std::size_t k = 0; k < m; ++k) {
                acc += Rational(binom[m + 1][k]) * numbers_[k];
            }
            numbers_[m] = -acc / Rational(static_cast<long>(m + 1));
        }

        // B_n(x) = sum_k C(n, k) B_k x^{n-k}
        coefficients_.resize(size);
        for (std::size_t n = 0; n < size; ++n) {
            coefficients_[n].assign(n + 1, Rational(0));
            for (std::size_t k = 0; k <= n; ++k) {
                coefficients_[n][n - k] = Rational(binom[n][k]) * numbers_[k];
            }
        }
    }

    std::vector<Rational> numbers_;
    std::vector<std::vector<Rational>> coefficients_;
};

inline Rational bernoulli_polynomial_exact(int n, const Rational& x)
{
    const auto& c = BernoulliTable::instance().polynomial(n);
    Rational acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

/// B_n(x) evaluated exactly on the binary value of `x`, rounded once.
inline double bernoulli_polynomial(int n, double x)
{
    if (!std::isfinite(x)) {
        throw Error(ErrorKind::non_finite, "bernoulli_polynomial argument");
    }
    return bernoulli_polynomial_exact(n, Rational(x)).convert_to<double>();
}

namespace detail {

// sin(pi z) with the integer part of Re z removed exactly first, so values
// near the poles of Gamma keep their relative accuracy.
inline Complex sin_pi(Complex z)
{
    const double n = std::round(z.real());
    const Complex r(z.real() - n, z.imag());
    Complex v = std::sin(std::numbers::pi * r);
    if (std::fmod(std::abs(n), 2.0) == 1.0) {
        v = -v;
    }
    return v;
}

inline Complex cos_pi(Complex z)
{
    return sin_pi(Complex(z.real() + 0.5, z.imag()));
}

inline bool is_nonpositive_integer(Complex z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 &&
           z.real() == std::floor(z.real());
}

// log Gamma by Stirling's series; requires |z| >= 20 and Re z > 0.
inline Complex stirling_log_gamma(Complex z)
{
    const auto& table = BernoulliTable::instance();
    const Complex inv = 1.0 / z;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex pw = inv;
    for (int k = 1; k <= 10; ++k) {
        const double b = table.number_as_double(2 * k);
        series += b / (2.0 * k * (2.0 * k - 1.0)) * pw;
        pw *= inv2;
    }
    return (z - 0.5) * std::log(z) - z +
           0.5 * std::log(2.0 * std::numbers::pi) + series;
}

constexpr double stirling_radius = 20.0;

inline Complex gamma_right_half(Complex z)
{
    Complex product = 1.0;
    while (std::abs(z) < stirling_radius) {
        product *= z;
        z += 1.0;
    }
    return std::exp(stirling_log_gamma(z)) / product;
}

inline Complex log_gamma_right_half(Complex z)
{
    Complex log_product = 0.0;
    while (std::abs(z) < stirling_radius) {
        log_product += std::log(z);
        z += 1.0;
    }
    return stirling_log_gamma(z) - log_product;
}

}  // namespace detail

/// Gamma function on the complex plane (reflection for Re z < 1/2, upward
/// shift plus Stirling series otherwise).
inline Complex gamma(Complex z)
{
    if (detail::is_nonpositive_integer(z)) {
        throw Error(ErrorKind::pole,
                    "Gamma has a pole at z = " + std::to_string(z.real()));
    }
    Complex v;
    if (z.real() < 0.5) {
        v = std::numbers::pi /
            (detail::sin_pi(z) * detail::gamma_right_half(1.0 - z));
    } else {
        v = detail::gamma_right_half(z);
    }
#ifdef ZETAVEV_GAMMA_FAULT
    // Fault-injection builds only: a z-dependent relative perturbation.
    v *= 1.0 + ZETAVEV_GAMMA_FAULT * z.real();
#endif
    return detail::require_finite(v, "gamma");
}

inline double gamma(double x)
{
    return gamma(Complex(x, 0.0)).real();
}

/// A branch of log Gamma; only exp(log_gamma(z)) is meaningful, the
/// imaginary part is determined modulo 2 pi.
inline Complex log_gamma(Complex z)
{
    if (detail::is_nonpositive_integer(z)) {
        throw Error(ErrorKind::pole, "log_gamma pole");
    }
    if (z.real() < 0.5) {
        return std::log(std::numbers::pi) - std::log(detail::sin_pi(z)) -
               detail::log_gamma_right_half(1.0 - z);
    }
    return detail::log_gamma_right_half(z);
}

namespace detail {

using LongComplex = std::complex<long double>;

// Euler-Maclaurin: direct sum up to n = M-1, then the integral, endpoint and
// ten Bernoulli corrections at N = M + a.
inline Complex hurwitz_euler_maclaurin(Complex s, double a)
{
    const double target = 10.0 + std::max(std::abs(s), 2.0 * std::abs(s.imag()));
    const auto shift = static_cast<long>(std::max(0.0, std::ceil(target - a)));
    const LongComplex sl(s.real(), s.imag());

    LongComplex acc = 0.0L;
    for (long n = 0; n < shift; ++n) {
        acc += std::exp(-sl * std::log(static_cast<long double>(n) + a));
    }

    const long double big_n = static_cast<long double>(shift) + a;
    const long double log_n = std::log(big_n);
    const LongComplex n_pow = std::exp(-sl * log_n);  // N^{-s}
    acc += n_pow * big_n / (sl - 1.0L) + 0.5L * n_pow;

    const auto& table = BernoulliTable::instance();
    const long double inv_n2 = 1.0L / (big_n * big_n);
    LongComplex term = sl * n_pow / big_n;  // (s)_1 N^{-s-1}
    long double factorial = 2.0L;           // (2j)!
    for (int j = 1; j <= 10; ++j) {
        const long double b = table.number(2 * j).convert_to<long double>();
        acc += b / factorial * term;
        term *= (sl + static_cast<long double>(2 * j - 1)) *
                (sl + static_cast<long double>(2 * j)) * inv_n2;
        factorial *= static_cast<long double>((2 * j + 1) * (2 * j + 2));
    }
    return Complex(static_cast<double>(acc.real()),
                   static_cast<double>(acc.imag()));
}

// Hurwitz's Fourier representation, valid for Re s < 0 and 0 < q <= 1:
// zeta(s, q) = 2 Gamma(1-s) (2 pi)^{s-1}
//              [sin(pi s/2) sum cos(2 pi k q) k^{s-1}
//             + cos(pi s/2) sum sin(2 pi k q) k^{s-1}]
inline Complex hurwitz_fourier(Complex s, double q)
{
    const double sigma = s.real();
    const double k_needed = std::ceil(std::pow(1e17, 1.0 / -sigma)) + 1.0;
    const auto terms = static_cast<long>(std::min(k_needed, 200000.0));
    const LongComplex exponent(s.real() - 1.0, s.imag());

    LongComplex cos_sum = 0.0L;
    LongComplex sin_sum = 0.0L;
    for (long k = terms; k >= 1; --k) {
        const long double kl = static_cast<long double>(k);
        const LongComplex power = std::exp(exponent * std::log(kl));
        const long double phase =
            2.0L * std::numbers::pi_v<long double> *
            std::fmod(kl * static_cast<long double>(q), 1.0L);
        cos_sum += std::cos(phase) * power;
        sin_sum += std::sin(phase) * power;
    }
    const Complex half_s = 0.5 * s;
    const Complex prefactor =
        2.0 * gamma(1.0 - s) * std::exp((s - 1.0) * std::log(2.0 * std::numbers::pi));
    const Complex c(static_cast<double>(cos_sum.real()),
                    static_cast<double>(cos_sum.imag()));
    const Complex d(static_cast<double>(sin_sum.real()),
                    static_cast<double>(sin_sum.imag()));
    return prefactor * (sin_pi(half_s) * c + cos_pi(half_s) * d);
}

}  // namespace detail

/// Hurwitz zeta function zeta(s, a) = sum_{n>=0} (n + a)^{-s}, continued to
/// all s != 1, for real a > 0. Re s >= -3 uses Euler-Maclaurin; further left
/// the Fourier representation avoids the cancellation of large partial sums.
inline Complex hurwitz_zeta(Complex s, double a)
{
    if (s == Complex(1.0, 0.0)) {
        throw Error(ErrorKind::pole, "hurwitz_zeta pole at s = 1");
    }
    if (!(a > 0.0) || !std::isfinite(a)) {
        throw Error(ErrorKind::nonpositive_argument,
                    "hurwitz_zeta needs a > 0 (use hurwitz_zeta_extended)");
    }
    if (s.real() >= -3.0) {
        return detail::require_finite(detail::hurwitz_euler_maclaurin(s, a),
                                      "hurwitz_zeta");
    }
    double q = a - std::floor(a);
    if (q == 0.0) {
        q = 1.0;
    }
    const auto shift = static_cast<long>(std::llround(a - q));
    Complex head = 0.0;
    for (long n = 0; n < shift; ++n) {
        head += std::exp(-s * std::log(q + static_cast<double>(n)));
    }
    return detail::require_finite(detail::hurwitz_fourier(s, q) - head,
                                  "hurwitz_zeta");
}

/// zeta_H(-k; a) = -B_{k+1}(a) / (k + 1), valid for every real a.
inline double hurwitz_zeta_extended(int k, double a)
{
    if (k < 0) {
        throw Error(ErrorKind::degree_exceeds_table, "negative k");
    }
    BernoulliTable::check_degree(k + 1);
    return -bernoulli_polynomial(k + 1, a) / static_cast<double>(k + 1);
}

inline Complex riemann_zeta(Complex s)
{
    return hurwitz_zeta(s, 1.0);
}

/// Generalized binomial coefficient (1/2 choose j).
inline Rational binom_half_exact(int j)
{
    if (j < 0) {
        throw Error(ErrorKind::nonpositive_argument, "binom_half needs j >= 0");
    }
    Rational acc = 1;
    for (int i = 0; i < j; ++i) {
        acc *= (Rational(1, 2) - i) / Rational(i + 1);
    }
    return acc;
}

inline double binom_half(int j)
{
    return binom_half_exact(j).convert_to<double>();
}

/// Surface measure of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
inline double sphere_area(int n)
{
    if (n < 1) {
        throw Error(ErrorKind::nonpositive_argument, "sphere_area needs n >= 1");
    }
    const double half = 0.5 * n;
    return 2.0 * std::pow(std::numbers::pi, half) / gamma(half);
}

}  // namespace zetavev

#endif  // ZETAVEV_SPECFUN_HPP_
