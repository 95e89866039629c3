#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "zetavev/oracle.hpp"
#include "zetavev/spectral.hpp"

using namespace zetavev;

namespace {

template <class F>
ErrorKind kind_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no zetavev::Error thrown");
    return ErrorKind::config;
}

constexpr double pi = std::numbers::pi;

}  // namespace

TEST_CASE("SpectralFamily construction", "[spectral]")
{
    const auto f = SpectralFamily::ascending(2.0, 0.5, -1, 3);
    CHECK(f.eigenvalue(0) == 1.0);
    CHECK(f.eigenvalue(2) == 5.0);
    CHECK(f.weight() == -1);
    CHECK(f.multiplicity() == 3);
    CHECK_FALSE(f.has_zero_mode());

    CHECK(SpectralFamily::ascending(1.0, -2.0).has_zero_mode());
    CHECK(SpectralFamily::ascending(1.0, -2.0 + 1e-13).has_zero_mode());
    CHECK_FALSE(SpectralFamily::ascending(1.0, 2.0).has_zero_mode());
    CHECK_FALSE(SpectralFamily::ascending(1.0, -2.0 + 1e-9).has_zero_mode());

    CHECK(kind_of([] { SpectralFamily::ascending(0.0, 1.0); }) == ErrorKind::nonpositive_argument);
    CHECK(kind_of([] { SpectralFamily::ascending(1.0, 1.0, 2); }) ==
          ErrorKind::nonpositive_argument);
    CHECK(kind_of([] { SpectralFamily::ascending(1.0, 1.0, 1, 0); }) ==
          ErrorKind::nonpositive_argument);
}

TEST_CASE("descending windows list the same levels", "[spectral]")
{
    // n < 3 of 1.5 (n + 0.25): 0.375, 1.875, 3.375 with the largest first
    const auto f = SpectralFamily::descending(1.5, 0.25, 3);
    CHECK(f.orientation() == -1);
    CHECK(f.eigenvalue(0) == Catch::Approx(3.375));
    CHECK(f.eigenvalue(1) == Catch::Approx(1.875));
    CHECK(f.eigenvalue(2) == Catch::Approx(0.375));
    CHECK(f.eigenvalue(3) == Catch::Approx(-1.125));
    for (int n = 0; n < 6; ++n) {
        CHECK(f.eigenvalue(n + 1) < f.eigenvalue(n));
    }
}

TEST_CASE("gauged_trace: examples", "[spectral]")
{
    const auto casimir = gauged_trace({SpectralFamily::ascending(2.0 * pi, 1.0), 1});
    CHECK(casimir.pole_order == 0);
    CHECK(std::abs(casimir.constant - (-pi / 6.0)) < 1e-14);

    const auto half = gauged_trace({SpectralFamily::ascending(1.0, 0.5), 0});
    CHECK(std::abs(half.constant) < 1e-15);

    // explicit levels -1.5, -0.5 plus zeta_H(-1; 0.5); equals -B_2(-1.5)/2
    const auto split = gauged_trace({SpectralFamily::ascending(1.0, -1.5), 1});
    CHECK(std::abs(split.constant - (-1.9583333333333333)) < 1e-13);
    CHECK(std::abs(split.constant - hurwitz_zeta_extended(1, -1.5)) < 1e-13);
}

TEST_CASE("gauged_trace: errors and zero modes", "[spectral]")
{
    CHECK(kind_of([] { gauged_trace({SpectralFamily::ascending(1.0, -2.0), 0}); }) ==
          ErrorKind::zero_mode);
    CHECK(kind_of([] { gauged_trace({SpectralFamily::ascending(1.0, 1.0), 2}); }) ==
          ErrorKind::invalid_power);
    CHECK(kind_of([] { gauged_trace({SpectralFamily::ascending(1.0, 1.0), -1}); }) ==
          ErrorKind::invalid_power);

    // a zero level contributes nothing to an energy sum
    const auto with_zero = gauged_trace({SpectralFamily::ascending(1.0, -2.0), 1});
    const double levels = -2.0 + -1.0;
    CHECK(std::abs(with_zero.constant - (levels + hurwitz_zeta(-1.0, 1.0))) < 1e-14);
    CHECK(std::abs(with_zero.constant - hurwitz_zeta_extended(1, -2.0)) < 1e-13);
}

TEST_CASE("gauged_trace: split reproduces the polynomial continuation",
          "[spectral][property]")
{
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> ua(-5.0, 5.0);
    std::uniform_real_distribution<double> us(0.1, 10.0);
    int tested = 0;
    for (int i = 0; i < 400; ++i) {
        const double a = ua(rng);
        const double scale = us(rng);
        const auto f = SpectralFamily::ascending(scale, a);
        if (f.has_zero_mode()) {
            continue;
        }
        for (int k = 0; k <= 1; ++k) {
            const double want = std::pow(scale, k) * hurwitz_zeta_extended(k, a);
            const double got = gauged_trace({f, k}).constant.real();
            CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
        }
        ++tested;
    }
    CHECK(tested > 390);
}

TEST_CASE("gauged_trace_at agrees with convergent sums", "[spectral][oracle]")
{
    // Re z < -1 - k: the trace is an absolutely convergent sum
    for (double offset : {0.5, 1.0, 2.75}) {
        for (int k = 0; k <= 1; ++k) {
            const Complex z(-3.5 - k, 0.7);
            const auto f = SpectralFamily::ascending(1.3, offset, 1, 2);
            const auto ref = partial_sum_reference(-static_cast<double>(k) - z, offset, 20000);
            const Complex want = 2.0 * std::pow(1.3, k) * std::exp(z * std::log(1.3)) * ref.value;
            CHECK(std::abs(gauged_trace_at({f, k}, z) - want) <= 2.0 * 1.3 * 1.3 * ref.bound);
        }
    }
}

TEST_CASE("gauged_trace: filled-level shift", "[spectral][property]")
{
    for (long upper = -4; upper <= 6; ++upper) {
        for (double shift : {0.5, 0.13, -0.71}) {
            const auto a = gauged_trace({SpectralFamily::descending(1.0, shift, upper), 0});
            const auto b = gauged_trace({SpectralFamily::descending(1.0, shift, upper + 1), 0});
            CHECK(std::abs(b.constant - a.constant - 1.0) < 1e-12);
        }
    }
}

TEST_CASE("gauged_trace: linear in multiplicity", "[spectral][property]")
{
    for (double offset : {1.0, 0.3, -2.6}) {
        for (int k = 0; k <= 1; ++k) {
            const auto f = SpectralFamily::ascending(2.0 * pi, offset);
            const auto one = gauged_trace({f, k});
            const auto two = gauged_trace({f.with_multiplicity(2), k});
            CHECK(two.constant == 2.0 * one.constant);
        }
    }
}

TEST_CASE("LaurentValue invariants", "[spectral]")
{
    CHECK(kind_of([] { LaurentValue::make(2, 1.0, 0.0); }) == ErrorKind::mismatched_pole_order);
    CHECK(kind_of([] { LaurentValue::make(0, 1.0, 0.0); }) == ErrorKind::mismatched_pole_order);
    CHECK(LaurentValue::make(1, 2.0, 3.0).residue == Complex(2.0));
}

TEST_CASE("vev_quotient", "[spectral]")
{
    const auto a = vev_quotient(LaurentValue::regular(-pi / 6.0), LaurentValue::regular(1.0));
    CHECK(a.value == Complex(-pi / 6.0));
    CHECK(a.mode == QuotientMode::constant_ratio);

    const auto b = vev_quotient(LaurentValue::simple_pole(2.0, 7.0),
                                LaurentValue::simple_pole(4.0, 1.0));
    CHECK(b.value == Complex(0.5));
    CHECK(b.mode == QuotientMode::residue_ratio);

    CHECK(kind_of([] {
              vev_quotient(LaurentValue::regular(3.0), LaurentValue::simple_pole(1.0, 0.0));
          }) == ErrorKind::mismatched_pole_order);
    CHECK(kind_of([] {
              vev_quotient(LaurentValue::regular(3.0), LaurentValue::regular(0.0));
          }) == ErrorKind::zero_denominator);
    CHECK(kind_of([] {
              vev_quotient(LaurentValue::simple_pole(1.0, 3.0),
                           LaurentValue::simple_pole(0.0, 1.0));
          }) == ErrorKind::zero_denominator);
}

TEST_CASE("vev_quotient: scaling invariance", "[spectral][property]")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-10.0, 10.0);
    for (int i = 0; i < 200; ++i) {
        const Complex c(u(rng), u(rng));
        const Complex n(u(rng), u(rng));
        const Complex d(u(rng), u(rng));
        for (int order = 0; order <= 1; ++order) {
            const auto num = order ? LaurentValue::simple_pole(n, 1.0) : LaurentValue::regular(n);
            const auto den = order ? LaurentValue::simple_pole(d, 2.0) : LaurentValue::regular(d);
            const auto scaled_num = LaurentValue::make(order, num.residue * c, num.constant * c);
            const auto scaled_den = LaurentValue::make(order, den.residue * c, den.constant * c);
            const Complex base = vev_quotient(num, den).value;
            CHECK(std::abs(vev_quotient(scaled_num, scaled_den).value - base) <=
                  1e-12 * std::abs(base));
        }
    }
}

TEST_CASE("rescale_gauge", "[spectral]")
{
    const GaugedSumSpec casimir{SpectralFamily::ascending(2.0 * pi, 1.0), 1};
    CHECK(std::abs(rescale_gauge(casimir, 2.0).constant + pi / 6.0) < 1e-12);

    const auto pole = LaurentValue::simple_pole(0.75, 1.25);
    CHECK(std::abs(rescale_gauge(pole, std::numbers::e).constant - 2.0) < 1e-15);
    CHECK(rescale_gauge(LaurentValue::regular(4.0), 10.0).constant == Complex(4.0));
    CHECK(kind_of([&] { rescale_gauge(casimir, 0.0); }) == ErrorKind::nonpositive_argument);
}

TEST_CASE("rescale_gauge: pole-free constants are gauge independent", "[spectral][property]")
{
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ua(-4.0, 4.0);
    std::uniform_real_distribution<double> ut(-2.0, 2.0);
    for (int i = 0; i < 100; ++i) {
        const auto f = SpectralFamily::ascending(0.9, ua(rng));
        if (f.has_zero_mode()) {
            continue;
        }
        const double theta = std::pow(10.0, ut(rng));
        for (int k = 0; k <= 1; ++k) {
            const auto base = gauged_trace({f, k});
            CHECK(std::abs(rescale_gauge(GaugedSumSpec{f, k}, theta).constant - base.constant) <
                  1e-10 * std::max(1.0, std::abs(base.constant)));
        }
    }
}
