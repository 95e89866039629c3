#ifndef ZETAVEV_ERROR_HPP_
#define ZETAVEV_ERROR_HPP_

#include <complex>
#include <cmath>
#include <stdexcept>
#include <string>

namespace zetavev {

using Complex = std::complex<double>;

enum class ErrorKind {
    pole,
    nonpositive_argument,
    degree_exceeds_table,
    zero_mode,
    invalid_power,
    mismatched_pole_order,
    zero_denominator,
    denominator_underflow,
    tail_not_negligible,
    ill_conditioned_fit,
    non_finite,
    no_decay,
    internal_mismatch,
    config,
};

inline const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::nonpositive_argument: return "nonpositive-argument";
    case ErrorKind::degree_exceeds_table: return "degree-exceeds-table";
    case ErrorKind::zero_mode: return "zero-mode";
    case ErrorKind::invalid_power: return "invalid-power";
    case ErrorKind::mismatched_pole_order: return "mismatched-pole-order";
    case ErrorKind::zero_denominator: return "zero-denominator";
    case ErrorKind::denominator_underflow: return "denominator-underflow";
    case ErrorKind::tail_not_negligible: return "tail-not-negligible";
    case ErrorKind::ill_conditioned_fit: return "ill-conditioned-fit";
    case ErrorKind::non_finite: return "non-finite";
    case ErrorKind::no_decay: return "no-decay";
    case ErrorKind::internal_mismatch: return "internal-mismatch";
    case ErrorKind::config: return "config";
    }
    return "unknown";
}

/// Every failure in the library is reported through this type; `kind()`
/// lets callers branch without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind)
    {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

namespace detail {

inline double require_finite(double v, const char* where)
{
    if (!std::isfinite(v)) {
        throw Error(ErrorKind::non_finite, where);
    }
    return v;
}

inline Complex require_finite(Complex v, const char* where)
{
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw Error(ErrorKind::non_finite, where);
    }
    return v;
}

}  // namespace detail
}  // namespace zetavev

#endif  // ZETAVEV_ERROR_HPP_
