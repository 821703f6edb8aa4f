#ifndef STIRLING_RAMANUJAN_THETA_HPP
#define STIRLING_RAMANUJAN_THETA_HPP

#include <stirling/ball/ball.hpp>
#include <stirling/ball/constants.hpp>
#include <stirling/ball/refine.hpp>
#include <stirling/exact/rational.hpp>
#include <stirling/outcome.hpp>

#include <optional>
#include <tuple>
#include <stdexcept>
#include <utility>

namespace stirling
{

// Ramanujan's form of the factorial:
//
//   n! = sqrt(pi) (n/e)^n (8n^3 + 4n^2 + n + theta_n / 30)^(1/6)
//
// so theta_n = 30 (A_n^6 - 8n^3 - 4n^2 - n) with A_n = n! / (sqrt(pi) (n/e)^n).
//
// Numerical note: A_n^6 is about 8n^3 while theta_n is below 1, so the
// subtraction cancels roughly log2(8n^3) leading bits. The radius of the
// result is the radius of A_n^6 times 30; the adaptive loop in theta() raises
// the working precision until that radius is small enough.

namespace detail
{

inline void require_positive_index(unsigned long n)
{
    if (n == 0) {
        throw std::invalid_argument("index n must be >= 1");
    }
}

} // namespace detail

/// (n/e)^n, computed as exp(n (ln n - 1)).
inline ball scaled_power(unsigned long n, mpfr_prec_t bits)
{
    detail::require_positive_index(n);
    const ball nb(static_cast<long>(n), bits);
    return exp(nb * (log(nb) - ball(1L, bits)));
}

/// A_n = n! / (sqrt(pi) (n/e)^n).
inline ball ramanujan_ratio(unsigned long n, mpfr_prec_t bits)
{
    return factorial(n, bits) / (sqrt(const_pi(bits)) * scaled_power(n, bits));
}

/// a_n = n! / (sqrt(n) (n/e)^n); tends to sqrt(2 pi).
inline ball a_n_at(unsigned long n, mpfr_prec_t bits)
{
    const ball nb(static_cast<long>(n), bits);
    return factorial(n, bits) / (sqrt(nb) * scaled_power(n, bits));
}

/// 8n^3 + 4n^2 + n, exactly.
inline integer ramanujan_cubic(unsigned long n)
{
    const integer z(n);
    return 8 * z * z * z + 4 * z * z + z;
}

/// theta_n at a fixed working precision.
inline ball theta_at(unsigned long n, mpfr_prec_t bits)
{
    detail::require_positive_index(n);
    const ball a = ramanujan_ratio(n, bits);
    return ball(30L, bits) * (pow(a, 6) - ball::from_integer(ramanujan_cubic(n), bits));
}

namespace detail
{

template <typename Producer>
ball tighten(Producer &&produce, const rational &max_radius, const precision_policy &policy)
{
    auto result = refine_until(
        produce,
        [&](const ball &b) -> std::optional<ball> {
            if (b.rad_rational() < max_radius) {
                return b;
            }
            return std::nullopt;
        },
        policy);
    if (!result.decided()) {
        throw precision_exhausted(policy.max_bits);
    }
    return *result.value;
}

} // namespace detail

/// Certified enclosure of theta_n with radius below max_radius.
/// Throws precision_exhausted if the policy cap is reached first.
inline ball theta(unsigned long n, const precision_policy &policy, const rational &max_radius = make_rational(1, 1000000))
{
    detail::require_positive_index(n);
    return detail::tighten([n](mpfr_prec_t bits) { return theta_at(n, bits); }, max_radius, policy);
}

/// Certified enclosure of a_n with radius below max_radius.
inline ball a_n(unsigned long n, const precision_policy &policy, const rational &max_radius = make_rational(1, 1000000))
{
    detail::require_positive_index(n);
    return detail::tighten([n](mpfr_prec_t bits) { return a_n_at(n, bits); }, max_radius, policy);
}

/// alpha_n = 1 - 11/(8n) + 5/(8n^2), beta_n = 1 - 11/(8n) + 11/(8n^2).
inline std::pair<rational, rational> hirschhorn_bounds(unsigned long n)
{
    detail::require_positive_index(n);
    const rational inv = make_rational(1, static_cast<long>(n));
    const rational base = 1 - make_rational(11, 8) * inv;
    return {base + make_rational(5, 8) * inv * inv, base + make_rational(11, 8) * inv * inv};
}

/// 1 - 3/(2n).
inline rational weak_lower_bound(unsigned long n)
{
    detail::require_positive_index(n);
    return 1 - make_rational(3, 2 * static_cast<long>(n));
}

struct staircase_result {
    bool holds = false;
    integer witness;     // 5n^2 - 11n - 11
    rational beta_n;
    rational alpha_next; // alpha_{n+1}
};

/// beta_n <= alpha_{n+1}, decided exactly and cross-validated against the
/// sign of 5n^2 - 11n - 11 (the two must agree for every n >= 1).
inline staircase_result staircase_check(unsigned long n)
{
    detail::require_positive_index(n);
    const integer z(n);
    staircase_result r;
    r.witness = 5 * z * z - 11 * z - 11;
    r.beta_n = hirschhorn_bounds(n).second;
    r.alpha_next = hirschhorn_bounds(n + 1).first;
    r.holds = r.beta_n <= r.alpha_next;
    if (r.holds != (r.witness >= 0)) {
        throw std::logic_error("staircase_check: exact comparison and polynomial witness disagree");
    }
    return r;
}

/// Adaptive certified comparison of a ball-valued quantity against a decision rule.
template <typename Producer, typename Decide>
outcome decide_adaptively(Producer &&produce, Decide &&decide, const precision_policy &policy)
{
    auto result = refine_until(
        produce,
        [&](const auto &value) -> std::optional<outcome> {
            const outcome o = decide(value);
            if (o == outcome::undecided) {
                return std::nullopt;
            }
            return o;
        },
        policy);
    return result.decided() ? *result.value : outcome::undecided;
}

inline outcome from_decision(decision d)
{
    switch (d) {
        case decision::yes:
            return outcome::holds;
        case decision::no:
            return outcome::fails;
        case decision::undecided:
            break;
    }
    return outcome::undecided;
}

/// theta_n >= 1 - 3/(2n), certified; undecided only if the policy cap is hit.
inline outcome weak_lower_check(unsigned long n, const precision_policy &policy)
{
    const rational bound = weak_lower_bound(n);
    return decide_adaptively([n](mpfr_prec_t bits) { return theta_at(n, bits); },
                             [&](const ball &t) {
                                 if (t.lower() >= bound) {
                                     return outcome::holds;
                                 }
                                 return t.upper() < bound ? outcome::fails : outcome::undecided;
                             },
                             policy);
}

/// alpha_n < theta_n < beta_n.
inline outcome sandwich_check(unsigned long n, const precision_policy &policy)
{
    const auto [alpha, beta] = hirschhorn_bounds(n);
    return decide_adaptively([n](mpfr_prec_t bits) { return theta_at(n, bits); },
                             [&](const ball &t) {
                                 const decision lo = certified_less(alpha, t);
                                 const decision hi = certified_less(t, beta);
                                 if (lo == decision::no || hi == decision::no) {
                                     return outcome::fails;
                                 }
                                 if (lo == decision::yes && hi == decision::yes) {
                                     return outcome::holds;
                                 }
                                 return outcome::undecided;
                             },
                             policy);
}

/// theta_n < theta_{n+1}.
inline outcome monotone_check(unsigned long n, const precision_policy &policy)
{
    return decide_adaptively(
        [n](mpfr_prec_t bits) { return std::pair{theta_at(n, bits), theta_at(n + 1, bits)}; },
        [](const std::pair<ball, ball> &t) { return from_decision(certified_less(t.first, t.second)); }, policy);
}

/// 3/10 < theta_n < 1.
inline outcome bracket_check(unsigned long n, const precision_policy &policy)
{
    return decide_adaptively([n](mpfr_prec_t bits) { return theta_at(n, bits); },
                             [](const ball &t) {
                                 const decision lo = certified_less(make_rational(3, 10), t);
                                 const decision hi = certified_less(t, rational(1));
                                 if (lo == decision::no || hi == decision::no) {
                                     return outcome::fails;
                                 }
                                 if (lo == decision::yes && hi == decision::yes) {
                                     return outcome::holds;
                                 }
                                 return outcome::undecided;
                             },
                             policy);
}

/// 8 pi^3 exp(1/(2n) - 1/(60n^3)), the lower bound for a_n^6.
inline ball a_n_sixth_lower_bound(unsigned long n, mpfr_prec_t bits)
{
    detail::require_positive_index(n);
    const rational z(static_cast<long>(n));
    const rational exponent = 1 / (2 * z) - 1 / (60 * z * z * z);
    return ball(8L, bits) * pow(const_pi(bits), 3) * exp(ball::from_rational(exponent, bits));
}

/// a_n^6 > 8 pi^3 exp(1/(2n) - 1/(60n^3)).
inline outcome a_n_sixth_check(unsigned long n, const precision_policy &policy)
{
    return decide_adaptively(
        [n](mpfr_prec_t bits) { return std::pair{pow(a_n_at(n, bits), 6), a_n_sixth_lower_bound(n, bits)}; },
        [](const std::pair<ball, ball> &v) { return from_decision(certified_less(v.second, v.first)); }, policy);
}

/// One row of the theta table.
struct theta_record {
    unsigned long n = 0;
    ball theta;
    rational alpha;
    rational beta;
    rational weak_lower;
};

/// theta_n tightened to max_radius together with its exact envelopes.
inline theta_record make_theta_record(unsigned long n, const precision_policy &policy,
                                      const rational &max_radius = make_rational(1, 1000000000000L))
{
    theta_record r;
    r.n = n;
    r.theta = theta(n, policy, max_radius);
    std::tie(r.alpha, r.beta) = hirschhorn_bounds(n);
    r.weak_lower = weak_lower_bound(n);
    return r;
}

} // namespace stirling

#endif
