#ifndef STIRLING_SERIES_TAYLOR_BOUNDS_HPP
#define STIRLING_SERIES_TAYLOR_BOUNDS_HPP

#include <stirling/ball/ball.hpp>
#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>
#include <stirling/exact/sign_certificate.hpp>
#include <stirling/outcome.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stirling
{

/// Tags for the four truncation inequalities; they appear verbatim in reports.
enum class bound_tag { eq2, eq3, eq4, eq5 };

enum class bound_direction { upper, lower };

enum class bounded_function { log1p, exp };

inline std::string_view to_string(bound_tag t)
{
    switch (t) {
        case bound_tag::eq2:
            return "Eq2";
        case bound_tag::eq3:
            return "Eq3";
        case bound_tag::eq4:
            return "Eq4";
        case bound_tag::eq5:
            return "Eq5";
    }
    return "";
}

/// poly(x) bounds f(x) from one side on valid_on.
struct taylor_bound {
    bound_tag tag;
    bounded_function function;
    bound_direction direction;
    polynomial poly;
    interval valid_on;
};

namespace detail
{

// x - x^2/2 + ... + (-1)^(k+1) x^k / k, k up to degree
inline polynomial log1p_truncation(unsigned degree)
{
    std::vector<rational> c(degree + 1);
    for (unsigned k = 1; k <= degree; ++k) {
        c[k] = make_rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    }
    return polynomial(std::move(c));
}

// 1 + x + x^2/2! + ... + x^degree/degree!
inline polynomial exp_truncation(unsigned degree)
{
    std::vector<rational> c(degree + 1);
    integer fact(1);
    for (unsigned k = 0; k <= degree; ++k) {
        if (k > 0) {
            fact *= k;
        }
        c[k] = make_rational(integer(1), fact);
    }
    return polynomial(std::move(c));
}

} // namespace detail

/// The truncation inequality for a tag.
///
/// Eq2, Eq3: ln(1+x) <= T5(x), T7(x) on (-1, 1].
/// Eq4: ln(1+x) >= T8(x) on [0, 1]. An even-degree truncation overshoots
///      ln(1+x) for negative x (x = -1/2 already fails), so the domain stops at 0.
/// Eq5: e^x >= 1 + x + x^2/2! + x^3/3! + x^4/4! on [0, inf).
inline taylor_bound bound(bound_tag tag)
{
    const interval log_domain{rational(-1), false, rational(1), true};
    switch (tag) {
        case bound_tag::eq2:
            return {tag, bounded_function::log1p, bound_direction::upper, detail::log1p_truncation(5), log_domain};
        case bound_tag::eq3:
            return {tag, bounded_function::log1p, bound_direction::upper, detail::log1p_truncation(7), log_domain};
        case bound_tag::eq4:
            return {tag, bounded_function::log1p, bound_direction::lower, detail::log1p_truncation(8),
                    interval{rational(0), true, rational(1), true}};
        case bound_tag::eq5:
            return {tag, bounded_function::exp, bound_direction::lower, detail::exp_truncation(4),
                    interval{rational(0), true, std::nullopt, false}};
    }
    throw std::invalid_argument("bound: unknown tag");
}

/// Enclosure of the bounded function at x.
inline ball bounded_value(const taylor_bound &b, const rational &x, mpfr_prec_t bits)
{
    if (b.function == bounded_function::exp) {
        return exp(ball::from_rational(x, bits));
    }
    return log(ball::from_rational(rational(1) + x, bits));
}

/// Compares b.poly(x) against a certified enclosure of the function at x.
/// Throws std::domain_error when x is outside the bound's validity domain.
inline outcome check_bound_at(const taylor_bound &b, const rational &x, mpfr_prec_t bits)
{
    if (!b.valid_on.contains(x)) {
        throw std::domain_error("check_bound_at: x outside validity domain of " + std::string(to_string(b.tag)));
    }
    const rational p = b.poly(x);
    const ball f = bounded_value(b, x, bits);
    if (b.direction == bound_direction::upper) {
        if (p >= f.upper()) {
            return outcome::holds;
        }
        return p < f.lower() ? outcome::fails : outcome::undecided;
    }
    if (p <= f.lower()) {
        return outcome::holds;
    }
    return p > f.upper() ? outcome::fails : outcome::undecided;
}

inline outcome check_bound_at(bound_tag tag, const rational &x, mpfr_prec_t bits)
{
    return check_bound_at(bound(tag), x, bits);
}

} // namespace stirling

#endif
