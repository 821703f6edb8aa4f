#ifndef STIRLING_BALL_FORMAT_HPP
#define STIRLING_BALL_FORMAT_HPP

#include <stirling/ball/ball.hpp>
#include <stirling/exact/json.hpp>

#include <mpfr.h>

#include <algorithm>
#include <memory>
#include <string>
#include <string_view>

namespace stirling
{

namespace detail
{

inline std::string mpfr_format(const char *fmt, int digits, mpfr_srcptr x)
{
    char *buf = nullptr;
    if (mpfr_asprintf(&buf, fmt, digits, x) < 0) {
        throw std::runtime_error("mpfr_asprintf failed");
    }
    std::unique_ptr<char, void (*)(char *)> guard(buf, mpfr_free_str);
    return std::string(buf);
}

} // namespace detail

/// Midpoint rounded to nearest with `digits` digits after the decimal point.
inline std::string format_midpoint(const ball &b, int digits)
{
    return detail::mpfr_format("%.*RNf", digits, b.midpoint());
}

/// Radius in scientific notation, rounded upward so the printed value still bounds it.
inline std::string format_radius(const ball &b, int significant = 2)
{
    return detail::mpfr_format("%.*RUe", significant - 1, b.radius());
}

/// "0.3359 ± 1.2e-21"
inline std::string format_ball(const ball &b, int digits)
{
    return format_midpoint(b, digits) + " ± " + format_radius(b);
}

/// Exact value of a fixed-point decimal string such as "-0.3359".
inline rational decimal_to_rational(std::string_view text)
{
    std::string digits;
    integer scale = 1;
    bool after_point = false;
    for (char c : text) {
        if (c == '.') {
            after_point = true;
            continue;
        }
        digits += c;
        if (after_point) {
            scale *= 10;
        }
    }
    return make_rational(integer(digits, 10), scale);
}

/// Printed midpoint with `digits` decimals and a radius r (rounded up to two
/// significant digits) such that [printed - r, printed + r] contains the ball.
struct decimal_enclosure {
    std::string midpoint;
    std::string radius;
    rational exact_midpoint;
    rational exact_radius;
};

inline decimal_enclosure enclose_decimal(const ball &b, int digits)
{
    decimal_enclosure e;
    e.midpoint = format_midpoint(b, digits);
    e.exact_midpoint = decimal_to_rational(e.midpoint);
    e.exact_radius = std::max<rational>(b.upper() - e.exact_midpoint, e.exact_midpoint - b.lower());
    detail::mpfr_float r(detail::radius_prec);
    mpfr_set_q(r.get(), e.exact_radius.get_mpq_t(), MPFR_RNDU);
    e.radius = detail::mpfr_format("%.*RUe", 1, r.get());
    return e;
}

/// Exact transport form: midpoint and radius as rationals plus the working precision.
inline json ball_to_json(const ball &b)
{
    return json{{"mid", rational_to_json(b.mid_rational())},
                {"rad", rational_to_json(b.rad_rational())},
                {"bits", static_cast<long>(b.precision())}};
}

} // namespace stirling

#endif
