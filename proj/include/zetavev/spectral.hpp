#ifndef ZETAVEV_SPECTRAL_HPP_
#define ZETAVEV_SPECTRAL_HPP_

#include <cmath>
#include <complex>
#include <string>

#include "zetavev/error.hpp"
#include "zetavev/specfun.hpp"

namespace zetavev {

/// An arithmetic-progression spectrum eps_n = orientation * scale * (n + offset)
/// over n >= 0, each level counted `multiplicity` times and weighted by
/// `weight` in a trace.
///
/// Descending windows sum_{n < upper} of scale * (n + shift) are stored in the
/// same ascending form through the substitution n -> upper - 1 - n, which
/// flips the orientation.
class SpectralFamily {
public:
    /// Tolerance under which n + offset is treated as an exact zero.
    static constexpr double zero_mode_tolerance = 1e-12;

    static SpectralFamily ascending(double scale, double offset, int weight = 1,
                                    int multiplicity = 1)
    {
        return SpectralFamily(scale, offset, 1, weight, multiplicity);
    }

    /// The window n < upper of eps_n = scale * (n + shift).
    static SpectralFamily descending(double scale, double shift, long upper,
                                     int weight = 1, int multiplicity = 1)
    {
        // scale * (upper - 1 - k + shift) = -scale * (k + 1 - upper - shift)
        return SpectralFamily(scale, 1.0 - static_cast<double>(upper) - shift, -1,
                              weight, multiplicity);
    }

    double scale() const noexcept { return scale_; }
    double offset() const noexcept { return offset_; }
    int orientation() const noexcept { return orientation_; }
    int weight() const noexcept { return weight_; }
    int multiplicity() const noexcept { return multiplicity_; }

    /// True when n + offset vanishes for some n >= 0.
    bool has_zero_mode() const noexcept { return zero_mode_; }

    double eigenvalue(long n) const
    {
        return orientation_ * scale_ * (static_cast<double>(n) + offset_);
    }

    SpectralFamily with_scale(double scale) const
    {
        return SpectralFamily(scale, offset_, orientation_, weight_, multiplicity_);
    }

    SpectralFamily with_multiplicity(int multiplicity) const
    {
        return SpectralFamily(scale_, offset_, orientation_, weight_, multiplicity);
    }

private:
    SpectralFamily(double scale, double offset, int orientation, int weight,
                   int multiplicity)
        : scale_(scale), offset_(offset), orientation_(orientation),
          weight_(weight), multiplicity_(multiplicity)
    {
        if (!(scale > 0.0) || !std::isfinite(scale)) {
            throw Error(ErrorKind::nonpositive_argument, "family scale must be > 0");
        }
        if (!std::isfinite(offset)) {
            throw Error(ErrorKind::non_finite, "family offset");
        }
        if (weight != 1 && weight != -1) {
            throw Error(ErrorKind::nonpositive_argument, "family weight must be +1 or -1");
        }
        if (multiplicity < 1) {
            throw Error(ErrorKind::nonpositive_argument, "family multiplicity must be >= 1");
        }
        const double nearest = std::round(offset);
        zero_mode_ = nearest <= 0.0 && std::abs(offset - nearest) <= zero_mode_tolerance;
    }

    double scale_;
    double offset_;
    int orientation_;
    int weight_;
    int multiplicity_;
    bool zero_mode_ = false;
};

/// A family with eps^power inserted: power 0 for charges, 1 for energies.
struct GaugedSumSpec {
    SpectralFamily family;
    int power = 0;
};

/// Laurent data of a zeta-trace at z = 0 (pole order at most 1).
struct LaurentValue {
    int pole_order = 0;
    Complex residue = 0.0;
    Complex constant = 0.0;

    static LaurentValue regular(Complex constant) { return {0, 0.0, constant}; }
    static LaurentValue simple_pole(Complex residue, Complex constant)
    {
        return make(1, residue, constant);
    }

    static LaurentValue make(int pole_order, Complex residue, Complex constant)
    {
        if (pole_order < 0 || pole_order > 1) {
            throw Error(ErrorKind::mismatched_pole_order,
                        "pole order " + std::to_string(pole_order) + " not supported");
        }
        if (pole_order == 0 && residue != Complex(0.0)) {
            throw Error(ErrorKind::mismatched_pole_order,
                        "nonzero residue without a pole");
        }
        return {pole_order, residue, constant};
    }
};

namespace detail {

struct SplitFamily {
    long negative_count;  // n with n + offset < 0
    bool zero_mode;
    double tail_offset;   // in (0, 1]
};

inline SplitFamily split(const SpectralFamily& family)
{
    const double a = family.offset();
    if (family.has_zero_mode()) {
        const long zero_index = -std::lround(a);
        return {zero_index, true, 1.0};
    }
    const long negatives = a < 0.0 ? static_cast<long>(std::ceil(-a)) : 0;
    return {negatives, false, a + static_cast<double>(negatives)};
}

inline void check_power(int power)
{
    if (power != 0 && power != 1) {
        throw Error(ErrorKind::invalid_power,
                    "power must be 0 or 1, got " + std::to_string(power));
    }
}

}  // namespace detail

/// The meromorphic trace
///   F(z) = sum_{n>=0} weight * mult * eps_n^power * |eps_n|^z
/// at an arbitrary z != 1 - power. Levels with n + offset < 0 are summed
/// explicitly, the positive tail is a Hurwitz zeta value.
inline Complex gauged_trace_at(const GaugedSumSpec& spec, Complex z)
{
    detail::check_power(spec.power);
    const auto& f = spec.family;
    if (f.has_zero_mode() && spec.power == 0) {
        throw Error(ErrorKind::zero_mode, "|0|^z is undefined for a charge trace");
    }
    const auto parts = detail::split(f);
    const double k = spec.power;

    Complex explicit_part = 0.0;
    for (long n = 0; n < parts.negative_count; ++n) {
        const double x = static_cast<double>(n) + f.offset();  // negative
        explicit_part += std::pow(x, k) * std::exp(z * std::log(-x));
    }
    const Complex tail = hurwitz_zeta(-k - z, parts.tail_offset);
    const double prefactor =
        f.weight() * f.multiplicity() * std::pow(f.orientation() * f.scale(), k);
    return detail::require_finite(
        prefactor * std::exp(z * std::log(f.scale())) * (explicit_part + tail),
        "gauged_trace_at");
}

/// Laurent data at z = 0 of the gauged trace. For these lattice families the
/// continuation is regular at 0, so only the constant term is populated.
inline LaurentValue gauged_trace(const GaugedSumSpec& spec)
{
    return LaurentValue::regular(gauged_trace_at(spec, 0.0));
}

enum class QuotientMode { constant_ratio, residue_ratio };

inline const char* to_string(QuotientMode mode)
{
    return mode == QuotientMode::constant_ratio ? "constant-ratio" : "residue-ratio";
}

struct VevQuotient {
    Complex value;
    QuotientMode mode;
};

/// Quotient of two zeta-traces at z = 0: constant terms when both are
/// regular, residues when both have a simple pole.
inline VevQuotient vev_quotient(const LaurentValue& num, const LaurentValue& den)
{
    if (num.pole_order != den.pole_order) {
        throw Error(ErrorKind::mismatched_pole_order,
                    "numerator pole order " + std::to_string(num.pole_order) +
                        " vs denominator " + std::to_string(den.pole_order));
    }
    if (den.pole_order == 0) {
        if (den.constant == Complex(0.0)) {
            throw Error(ErrorKind::zero_denominator, "denominator constant term is 0");
        }
        return {num.constant / den.constant, QuotientMode::constant_ratio};
    }
    if (den.residue == Complex(0.0)) {
        throw Error(ErrorKind::zero_denominator, "denominator residue is 0");
    }
    return {num.residue / den.residue, QuotientMode::residue_ratio};
}

/// Effect of replacing the gauge |eps|^z by (theta |eps|)^z on Laurent data:
/// theta^z = 1 + z ln(theta) + ..., so only a pole moves the constant.
inline LaurentValue rescale_gauge(const LaurentValue& value, double theta)
{
    if (!(theta > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "theta must be > 0");
    }
    if (value.pole_order == 0) {
        return value;
    }
    return LaurentValue::simple_pole(value.residue,
                                     value.constant + value.residue * std::log(theta));
}

/// The trace with gauge (theta |eps|)^z, evaluated on the family rescaled by
/// theta: sum eps^k (theta|eps|)^z = theta^{-k} sum (theta eps)^k |theta eps|^z.
inline LaurentValue rescale_gauge(const GaugedSumSpec& spec, double theta)
{
    if (!(theta > 0.0)) {
        throw Error(ErrorKind::nonpositive_argument, "theta must be > 0");
    }
    GaugedSumSpec scaled{spec.family.with_scale(spec.family.scale() * theta), spec.power};
    const LaurentValue raw = gauged_trace(scaled);
    const double undo = std::pow(theta, -spec.power);
    return LaurentValue::make(raw.pole_order, raw.residue * undo, raw.constant * undo);
}

}  // namespace zetavev

#endif  // ZETAVEV_SPECTRAL_HPP_
