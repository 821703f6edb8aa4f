#ifndef STIRLING_PROOF_COMMON_HPP
#define STIRLING_PROOF_COMMON_HPP

#include <stirling/ball/refine.hpp>
#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational_function.hpp>
#include <stirling/proof/check.hpp>
#include <stirling/proof/report.hpp>

#include <optional>
#include <string>
#include <utility>

namespace stirling
{

struct proof_options {
    precision_policy policy;
    // theta_n is checked against the rational envelopes for 1 <= n <= sandwich_max.
    unsigned long sandwich_max = 1000;
    // Soft comparisons of derived decimals against reference values use this relative tolerance.
    rational soft_tolerance = make_rational(1, 10);
};

namespace detail
{

inline polynomial u()
{
    return polynomial::variable();
}

inline polynomial cst(const rational &c)
{
    return polynomial::constant(c);
}

inline polynomial cst(long num, long den = 1)
{
    return polynomial::constant(make_rational(num, den));
}

inline rational_function rf(const polynomial &p)
{
    return rational_function(p);
}

inline rational_function rf(const polynomial &num, const polynomial &den)
{
    return {num, den};
}

/// Refines until the comparison decides, then records the deciding enclosures.
/// If the cap is reached the check carries the last (overlapping) enclosures
/// and replays as undecided.
template <typename Producer>
json adaptive_compare(std::string label, Producer &&produce, relation rel, const precision_policy &policy)
{
    using pair_t = decltype(produce(mpfr_prec_t{}));
    std::optional<pair_t> last;
    refine_until(
        [&](mpfr_prec_t bits) { return produce(bits); },
        [&](const pair_t &p) -> std::optional<bool> {
            last = p;
            if (compare(enclose(p.first), rel, enclose(p.second)) != step_status::undecided) {
                return true;
            }
            return std::nullopt;
        },
        policy);
    json j = checks::interval_compare(std::move(label), checks::operand(last->first), rel, checks::operand(last->second));
    return j;
}

/// Soft comparison of a derived value against a reference decimal; informational only.
inline json soft_check(const rational &value, const rational &reference, const rational &tolerance)
{
    const rational rel_err = abs(value - reference) / abs(reference);
    return json{{"value", rational_to_json(value)},
                {"value_approx", to_decimal(value, 6)},
                {"reference", to_decimal(reference, 6)},
                {"relative_error", to_decimal(rel_err, 3)},
                {"tolerance", to_decimal(tolerance, 2)},
                {"within_tolerance", rel_err <= tolerance}};
}

} // namespace detail

} // namespace stirling

#endif
