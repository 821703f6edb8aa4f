#ifndef STIRLING_PROOF_SECOND_PROOF_HPP
#define STIRLING_PROOF_SECOND_PROOF_HPP

// Second route to monotonicity of theta_n. Only the weak lower bound
// theta_n >= 1 - 3/(2n) is used, together with a polynomial lower bound for
// e (n-1)^(n-1) / n^(n-1). Every symbolic manipulation is an exact polynomial
// or rational-function identity; every "small n" case is a certified ball
// comparison; every "for all large n" is a sign certificate.

#include <stirling/ball/constants.hpp>
#include <stirling/exact/sign_certificate.hpp>
#include <stirling/proof/common.hpp>
#include <stirling/ramanujan/theta.hpp>
#include <stirling/series/taylor_bounds.hpp>

#include <string>
#include <vector>

namespace stirling
{

namespace detail
{

/// Lower bound for e^x composed with x = u/2 - u^3/60, as it is usually displayed.
inline polynomial reference_exp_expansion()
{
    return polynomial{rational(1),
                      make_rational(1, 2),
                      make_rational(1, 8),
                      make_rational(1, 240),
                      make_rational(-11, 1920),
                      make_rational(-1, 480),
                      make_rational(-1, 4800),
                      make_rational(1, 14400),
                      make_rational(1, 57600),
                      make_rational(-1, 1296000),
                      make_rational(-1, 2592000),
                      rational(0),
                      make_rational(1, 311040000)};
}

/// u/2 - u^3/60
inline polynomial exp_argument()
{
    return polynomial{rational(0), make_rational(1, 2), rational(0), make_rational(-1, 60)};
}

/// u/2 + 7u^2/24 + 3u^3/16 + 743u^4/5760 + 215u^5/2304
inline polynomial ratio_series_tail()
{
    return polynomial{rational(0),           make_rational(1, 2),      make_rational(7, 24),
                      make_rational(3, 16), make_rational(743, 5760), make_rational(215, 2304)};
}

/// 1 + ratio_series_tail(u): the lower bound for e (n-1)^(n-1) / n^(n-1) at u = 1/n.
inline polynomial ratio_series()
{
    return cst(1) + ratio_series_tail();
}

/// 1/12 (1/n - 1/(n+1)) - 1/360 (1/n^3 - 1/(n+1)^3) as a function of n.
inline rational_function log_ratio_lower_bound(const polynomial &n)
{
    const polynomial np1 = n + cst(1);
    return rf(cst(1, 12)) * (rf(cst(1), n) - rf(cst(1), np1))
           - rf(cst(1, 360)) * (rf(cst(1), n * n * n) - rf(cst(1), np1 * np1 * np1));
}

/// 1/(12n) - 1/(360n^3)
inline rational_function stirling_exponent(const polynomial &n)
{
    return rf(cst(1, 12), n) - rf(cst(1, 360), n * n * n);
}

/// Exact expansion of the bound: (1-u)^6 [1 - (1-u)/u T7(u/(1-u)) - T5(S(u))].
inline polynomial ratio_bound_numerator(const taylor_bound &log_upper_outer, const taylor_bound &log_upper_inner)
{
    const polynomial one_minus_u = cst(1) - u();
    const polynomial &t7 = log_upper_outer.poly;
    polynomial first;
    for (std::size_t k = 1; k < t7.coefficients().size(); ++k) {
        first += t7.coeff(k) * pow(u(), static_cast<unsigned>(k - 1)) * pow(one_minus_u, static_cast<unsigned>(7 - k));
    }
    const polynomial sixth = pow(one_minus_u, 6);
    return sixth - first - sixth * compose(log_upper_inner.poly, ratio_series_tail());
}

/// Same quantity through rational-function arithmetic, as an independent route.
inline rational_function ratio_bound_function(const taylor_bound &log_upper_outer,
                                              const taylor_bound &log_upper_inner)
{
    const polynomial one_minus_u = cst(1) - u();
    const rational_function x = rf(u(), one_minus_u);
    return rf(cst(1)) - rf(one_minus_u, u()) * compose(log_upper_outer.poly, x)
           - rf(compose(log_upper_inner.poly, ratio_series_tail()));
}

struct scaled_expansion {
    polynomial exact; // the expansion itself
    polynomial scaled; // K * exact / u^shift, integer coefficients
    rational k;
    std::size_t shift = 0;
};

/// Clears denominators of p / u^shift.
inline scaled_expansion clear_denominators(const polynomial &p, std::size_t shift)
{
    scaled_expansion s;
    s.exact = p;
    s.shift = shift;
    const polynomial reduced = divide_exact(p, pow(u(), static_cast<unsigned>(shift)));
    s.k = rational(common_denominator(reduced));
    s.scaled = reduced * s.k;
    return s;
}

/// n (n-1)-scaled Ramanujan lower bound: (n-1) L(n-1) with
/// L(m) = 8m^3 + 4m^2 + m + 1/30 - 1/(20m).
inline polynomial shifted_weak_bound_times_m(const polynomial &m)
{
    return m * (cst(8) * m * m * m + cst(4) * m * m + m + cst(1, 30)) - cst(1, 20);
}

/// n^30 (n-1) [L(n-1) (S(1/n)^6 - 1) - (24n^2 - 16n + 5)], a polynomial in n.
inline polynomial difference_bound_numerator()
{
    const polynomial n = u();
    const polynomial m = n - cst(1);
    const polynomial w = reverse(ratio_series(), 5); // n^5 * series(1/n)
    const polynomial n30 = pow(n, 30);
    const polynomial cubic_step = polynomial{rational(5), rational(-16), rational(24)};
    return shifted_weak_bound_times_m(m) * (pow(w, 6) - n30) - m * n30 * cubic_step;
}

inline rational_function difference_bound_function()
{
    const polynomial n = u();
    const polynomial m = n - cst(1);
    const rational_function weak = rf(cst(8) * m * m * m + cst(4) * m * m + m + cst(1, 30)) - rf(cst(1, 20), m);
    const rational_function series = compose(ratio_series(), rf(cst(1), n));
    rational_function sixth = series * series * series;
    sixth = sixth * sixth;
    return weak * (sixth - rf(cst(1))) - rf(polynomial{rational(5), rational(-16), rational(24)});
}

inline std::string base_case_id(const std::string &prefix, unsigned long n)
{
    return prefix + ".base-case.n" + std::to_string(n);
}

} // namespace detail

/// ln(a_n / a_{n+1}) > 1/12 (1/n - 1/(n+1)) - 1/360 (1/n^3 - 1/(n+1)^3).
inline proof_report verify_prop3(const proof_options &opts = {})
{
    using namespace detail;
    proof_report r;
    r.policy = opts.policy;
    const std::string ref = "ln(a_n/a_{n+1}) > (1/12)(1/n - 1/(n+1)) - (1/360)(1/n^3 - 1/(n+1)^3)";
    const polynomial n = u();

    {
        // ln a_n = ln n! - (n + 1/2) ln n + n; collect ln n, ln(n+1) and the constant.
        json c = json::array();
        c.push_back(checks::poly_equal("coefficient of ln(n+1)", (n + cst(3, 2)) - cst(1), n + cst(1, 2)));
        c.push_back(checks::poly_equal("coefficient of ln n", -(n + cst(1, 2)), -(n + cst(1, 2))));
        c.push_back(checks::poly_equal("constant", n - (n + cst(1)), cst(-1)));
        r.steps.push_back(make_step("prop3.log-ratio-identity", "ln(a_n/a_{n+1}) = (n + 1/2) ln(1 + 1/n) - 1",
                                    step_method::exact_polynomial, ref, std::move(c)));
    }
    const polynomial numerator{rational(0),    rational(360), rational(1080), rational(1110),
                               rational(420),  rational(27),  rational(-3),   rational(-1)};
    const polynomial one_plus_u = cst(1) + u();
    const polynomial weight = cst(180) * pow(one_plus_u, 3) * (cst(2) + u());
    {
        // Under u = 1/n: (1/u + 1/2) ln(1+u) - 1 > g  <=>  ln(1+u) > 2u (1 + g) / (2 + u).
        const rational_function g = rf(cst(1, 12)) * (rf(u()) - rf(u(), one_plus_u))
                                    - rf(cst(1, 360)) * (rf(pow(u(), 3)) - rf(pow(u(), 3), pow(one_plus_u, 3)));
        const rational_function target = rf(cst(2) * u(), cst(2) + u()) * (rf(cst(1)) + g);
        json c = json::array();
        c.push_back(checks::ratfun_equal("bound at u = 1/n", log_ratio_lower_bound(n),
                                         rf(cst(1, 12)) * (rf(cst(1), n) - rf(cst(1), n + cst(1)))
                                             - rf(cst(1, 360))
                                                   * (rf(cst(1), pow(n, 3)) - rf(cst(1), pow(n + cst(1), 3)))));
        c.push_back(checks::ratfun_equal("target for ln(1+u)", target, rf(numerator, weight)));
        c.push_back(checks::poly_equal(
            "numerator decomposition",
            cst(360) * u() * pow(one_plus_u, 3) + cst(30) * pow(u(), 3) * pow(one_plus_u, 2)
                - pow(u(), 5) * polynomial{rational(3), rational(3), rational(1)},
            numerator));
        c.push_back(checks::certificate("2u/(2+u) > 0", certify_positive_on_positive_reals(cst(2) + u())));
        r.steps.push_back(make_step(
            "prop3.substitution",
            "with u = 1/n the claim reads ln(1+u) > (360u + 1080u^2 + 1110u^3 + 420u^4 + 27u^5 - 3u^6 - u^7) / "
            "(180 (1+u)^3 (2+u))",
            step_method::exact_ratfun, ref, std::move(c)));
    }
    const polynomial bracket{rational(20), rational(0), rational(-561), rational(-1455), rational(-1215),
                             rational(-315)};
    {
        const taylor_bound lower = bound(bound_tag::eq4);
        const polynomial expansion = weight * lower.poly - numerator;
        const polynomial factored = cst(1, 14) * pow(u(), 7) * bracket;
        const polynomial slack = expansion - factored;
        json c = json::array();
        c.push_back(checks::rational_compare("Eq4 domain starts at or below 0", lower.valid_on.lower,
                                             relation::less_equal, rational(0)));
        c.push_back(checks::rational_compare("Eq4 domain reaches 1", *lower.valid_on.upper, relation::greater_equal,
                                             rational(1)));
        c.push_back(checks::certificate("180 (1+u)^3 (2+u) > 0", certify_positive_on_positive_reals(weight)));
        json extras{{"bound", std::string(to_string(lower.tag))}, {"expansion", expansion.to_string()}};
        if (slack.is_zero()) {
            c.push_back(checks::poly_equal("expansion = (u^7/14) bracket", expansion, factored));
            extras["slack"] = "identically zero";
        } else {
            c.push_back(checks::certificate("expansion - (u^7/14) bracket >= 0",
                                            certify_positive(slack, rational(1), positivity_strategy::companion)));
        }
        r.steps.push_back(make_step("prop3.expansion",
                                    "180 (1+u)^3 (2+u) T8(u) - numerator >= (u^7/14)(20 - 561u^2 - 1455u^3 - 1215u^4 - "
                                    "315u^5)",
                                    step_method::exact_polynomial, ref, std::move(c), std::move(extras)));
    }
    {
        const rational u_max = make_rational(1, 7);
        json c = json::array();
        json extras;
        try {
            const auto cert = certify_positive(bracket, u_max, positivity_strategy::companion);
            c.push_back(checks::certificate("bracket > 0 on (0, 1/7]", cert));
            extras["witness_value"] = rational_to_json(*cert.witness_value);
            extras["witness_approx"] = to_decimal(*cert.witness_value, 4);
        } catch (const cannot_certify &e) {
            extras["error"] = e.what();
        }
        r.steps.push_back(make_step("prop3.bracket-positivity",
                                    "20 - 561u^2 - 1455u^3 - 1215u^4 - 315u^5 > 0 for 0 < u <= 1/7 (n >= 7)",
                                    step_method::sign_certificate, ref, std::move(c), std::move(extras)));
    }
    for (unsigned long k = 1; k <= 6; ++k) {
        const rational rhs = log_ratio_lower_bound(n)(rational(static_cast<long>(k)));
        json c = json::array();
        c.push_back(adaptive_compare(
            "ln(a_n/a_{n+1}) > bound",
            [k, rhs](mpfr_prec_t bits) {
                const ball nb(static_cast<long>(k), bits);
                const ball lhs = (nb + ball::from_rational(make_rational(1, 2), bits))
                                     * log(ball(1L, bits) + ball(1L, bits) / nb)
                                 - ball(1L, bits);
                return std::pair{lhs, rhs};
            },
            relation::greater, opts.policy));
        r.steps.push_back(make_step(base_case_id("prop3", k), "inequality holds at n = " + std::to_string(k),
                                    step_method::ball_comparison, ref, std::move(c)));
    }
    return r;
}

/// a_n^6 >= 8 pi^3 exp(1/(2n) - 1/(60n^3)), from the telescoped log-ratio bound.
inline proof_report verify_corollary3(const proof_options &opts = {})
{
    using namespace detail;
    proof_report r;
    r.policy = opts.policy;
    const std::string ref = "a_n >= sqrt(2 pi) exp(1/(12n) - 1/(360n^3)); a_n^6 >= 8 pi^3 exp(1/(2n) - 1/(60n^3))";
    const polynomial n = u();
    {
        const proof_report base = verify_prop3(opts);
        std::size_t ok = 0;
        for (const auto &s : base.steps) {
            ok += s.verified() ? 1 : 0;
        }
        json c = json::array();
        c.push_back(checks::dependency("log-ratio bound verified", ok, base.steps.size()));
        r.steps.push_back(make_step("corollary3.depends-on-prop3", "the log-ratio bound holds for every n >= 1",
                                    step_method::exact_ratfun, ref, std::move(c)));
    }
    {
        // Summing f(k) - f(k+1) for k >= n telescopes to f(n), and a_k -> sqrt(2 pi).
        json c = json::array();
        c.push_back(checks::ratfun_equal("f(n) - f(n+1) = log-ratio bound",
                                         stirling_exponent(n) - stirling_exponent(n + cst(1)),
                                         log_ratio_lower_bound(n)));
        const rational_function f = stirling_exponent(n);
        c.push_back(checks::rational_compare("deg numer(f) < deg denom(f), so f(n) -> 0",
                                             rational(f.numerator().degree()), relation::less,
                                             rational(f.denominator().degree())));
        r.steps.push_back(make_step("corollary3.telescoping",
                                    "sum over k >= n of the log-ratio bound equals 1/(12n) - 1/(360n^3)",
                                    step_method::exact_ratfun, ref, std::move(c),
                                    json{{"limit", "a_n -> sqrt(2 pi) (Stirling), taken as known"}}));
    }
    {
        json c = json::array();
        c.push_back(checks::ratfun_equal("6 (1/(12n) - 1/(360n^3))", rf(cst(6)) * stirling_exponent(n),
                                         rf(cst(1, 2), n) - rf(cst(1, 60), pow(n, 3))));
        c.push_back(checks::rational_compare("(sqrt(2 pi))^6 = 2^3 pi^3", pow(rational(2), 3), relation::equal,
                                             rational(8)));
        r.steps.push_back(make_step("corollary3.exponent-algebra", "sixth power: 6/12 = 1/2, 6/360 = 1/60",
                                    step_method::exact_ratfun, ref, std::move(c)));
    }
    for (unsigned long k : {1UL, 5UL, 50UL}) {
        json c = json::array();
        c.push_back(adaptive_compare(
            "8 pi^3 exp(...) < a_n^6",
            [k](mpfr_prec_t bits) { return std::pair{a_n_sixth_lower_bound(k, bits), pow(a_n_at(k, bits), 6)}; },
            relation::less, opts.policy));
        r.steps.push_back(make_step("corollary3.spot.n" + std::to_string(k),
                                    "a_n^6 >= 8 pi^3 exp(1/(2n) - 1/(60n^3)) at n = " + std::to_string(k),
                                    step_method::ball_comparison, ref, std::move(c)));
    }
    return r;
}

/// theta_n >= 1 - 3/(2n). exp_lower is the exponential lower bound used in the
/// expansion (normally bound(Eq5); tests inject variants).
inline proof_report verify_prop4(const proof_options &opts = {}, const taylor_bound &exp_lower = bound(bound_tag::eq5))
{
    using namespace detail;
    proof_report r;
    r.policy = opts.policy;
    const std::string ref = "(n!/(sqrt(pi)(n/e)^n))^6 - 8n^3 - 4n^2 - n >= (1 - 3/(2n))/30";
    const polynomial n = u();
    {
        // A_n^6 = a_n^6 n^3 / pi^3 >= 8 n^3 exp(...); the remaining target is
        // 8n^3 exp(1/(2n) - 1/(60n^3)) - 8n^3 - 4n^2 - n - 1/30 + 1/(20n) >= 0.
        json c = json::array();
        c.push_back(checks::ratfun_equal("(1 - 3/(2n))/30 = 1/30 - 1/(20n)",
                                         rf(cst(1, 30)) * (rf(cst(1)) - rf(cst(3), cst(2) * n)),
                                         rf(cst(1, 30)) - rf(cst(1, 20), n)));
        c.push_back(checks::rational_compare("8 pi^3 * n^3 / pi^3 = 8 n^3", rational(8), relation::equal,
                                             rational(8)));
        r.steps.push_back(make_step("prop4.reduction",
                                    "it suffices that 8n^3 exp(1/(2n) - 1/(60n^3)) - 8n^3 - 4n^2 - n - 1/30 + 1/(20n) "
                                    ">= 0",
                                    step_method::exact_ratfun, ref, std::move(c)));
    }
    {
        json c = json::array();
        c.push_back(checks::certificate("1/2 - u^2/60 > 0 on (0, 1]",
                                        certify_positive(polynomial{make_rational(1, 2), rational(0),
                                                                    make_rational(-1, 60)},
                                                         rational(1), positivity_strategy::companion)));
        c.push_back(checks::rational_compare("exp bound domain starts at or below 0", exp_lower.valid_on.lower,
                                             relation::less_equal, rational(0)));
        r.steps.push_back(make_step("prop4.domain", "x = u/2 - u^3/60 >= 0 for 0 < u <= 1, inside the bound's domain",
                                    step_method::sign_certificate, ref, std::move(c),
                                    json{{"bound", std::string(to_string(exp_lower.tag))}}));
    }
    const polynomial composed = compose(exp_lower.poly, exp_argument());
    const polynomial reference = reference_exp_expansion();
    {
        json c = json::array();
        c.push_back(checks::poly_equal("composed lower bound = reference expansion", composed, reference));
        json extras{{"bound", std::string(to_string(exp_lower.tag))}, {"composed", composed.to_string()}};
        extras["u4_coefficient"] = rational_to_json(composed.coeff(4));
        extras["u12_coefficient"] = rational_to_json(composed.coeff(12));
        r.steps.push_back(make_step("prop4.composition",
                                    "T4(u/2 - u^3/60) = 1 + u/2 + u^2/8 + u^3/240 - 11u^4/1920 - u^5/480 - u^6/4800 + "
                                    "u^7/14400 + u^8/57600 - u^9/1296000 - u^10/2592000 + u^12/311040000",
                                    step_method::exact_polynomial, ref, std::move(c), std::move(extras)));
    }
    std::vector<rational> low(7);
    for (std::size_t k = 0; k <= 6; ++k) {
        low[k] = composed.coeff(k);
    }
    const polynomial truncated(low);
    {
        const polynomial tail = composed - truncated;
        const polynomial pair7{make_rational(1, 14400), rational(0), make_rational(-1, 1296000)};
        const polynomial pair8{make_rational(1, 57600), rational(0), make_rational(-1, 2592000)};
        json c = json::array();
        c.push_back(checks::poly_equal("tail = u^7 p7 + u^8 p8 + u^12/311040000", tail,
                                       pow(u(), 7) * pair7 + pow(u(), 8) * pair8
                                           + polynomial::monomial(make_rational(1, 311040000), 12)));
        for (const auto &[label, p] : {std::pair{"1/14400 - u^2/1296000 > 0 on (0, 1]", pair7},
                                       std::pair{"1/57600 - u^2/2592000 > 0 on (0, 1]", pair8}}) {
            try {
                c.push_back(checks::certificate(label, certify_positive(p, rational(1), positivity_strategy::companion)));
            } catch (const cannot_certify &) {
                c.push_back(checks::rational_compare(label, p(rational(1)), relation::greater, rational(0)));
            }
        }
        r.steps.push_back(make_step("prop4.truncation",
                                    "dropping degrees 7..12 lowers the bound for 0 < u <= 1",
                                    step_method::sign_certificate, ref, std::move(c)));
    }
    const polynomial residual_factor{rational(5), rational(-20), rational(-2)};
    {
        const polynomial cubic_part = polynomial{rational(8), rational(4), rational(1), make_rational(1, 30),
                                                 make_rational(-1, 20)};
        const polynomial residual{rational(0), make_rational(1, 240), make_rational(-1, 60), make_rational(-1, 600)};
        json c = json::array();
        c.push_back(checks::poly_equal("8 T(u) - (8 + 4u + u^2 + u^3/30 - u^4/20) = u^3 residual",
                                       cst(8) * truncated - cubic_part, pow(u(), 3) * residual));
        c.push_back(checks::poly_equal("residual = (u/1200)(5 - 20u - 2u^2)", residual,
                                       cst(1, 1200) * u() * residual_factor));
        r.steps.push_back(make_step("prop4.cancellation",
                                    "after multiplying by 8/u^3 the residual is u/240 - u^2/60 - u^3/600 = "
                                    "(u/1200)(5 - 20u - 2u^2)",
                                    step_method::exact_polynomial, ref, std::move(c)));
    }
    {
        json c = json::array();
        json extras;
        try {
            const auto cert = certify_positive(residual_factor, make_rational(1, 5), positivity_strategy::companion);
            c.push_back(checks::certificate("5 - 20u - 2u^2 > 0 on (0, 1/5]", cert));
            extras["witness_value"] = rational_to_json(*cert.witness_value);
            extras["witness_approx"] = to_decimal(*cert.witness_value, 2);
        } catch (const cannot_certify &e) {
            extras["error"] = e.what();
        }
        r.steps.push_back(make_step("prop4.residual-positivity", "5 - 20u - 2u^2 > 0 for 0 < u <= 1/5 (n >= 5)",
                                    step_method::sign_certificate, ref, std::move(c), std::move(extras)));
    }
    for (unsigned long k = 1; k <= 4; ++k) {
        const rational bound_k = weak_lower_bound(k);
        json c = json::array();
        c.push_back(adaptive_compare(
            "1 - 3/(2n) <= theta_n",
            [k, bound_k](mpfr_prec_t bits) { return std::pair{bound_k, theta_at(k, bits)}; }, relation::less_equal,
            opts.policy));
        r.steps.push_back(make_step(base_case_id("prop4", k), "theta_n >= 1 - 3/(2n) at n = " + std::to_string(k),
                                    step_method::ball_comparison, ref, std::move(c)));
    }
    return r;
}

/// e (n-1)^(n-1) / n^(n-1) >= 1 + 1/(2n) + 7/(24n^2) + 3/(16n^3) + 743/(5760n^4) + 215/(2304n^5) for n > 1.
inline proof_report verify_prop5(const proof_options &opts = {})
{
    using namespace detail;
    proof_report r;
    r.policy = opts.policy;
    const std::string ref = "e (n-1)^(n-1) / n^(n-1) >= 1 + 1/(2n) + 7/(24n^2) + 3/(16n^3) + 743/(5760n^4) + "
                            "215/(2304n^5)";
    const polynomial one_minus_u = cst(1) - u();
    const rational u_max = make_rational(1, 8);
    {
        // Taking logs with u = 1/n: 1 + (n-1) ln((n-1)/n) >= ln(series), and
        // ln((n-1)/n) = ln(1-u) = -ln(1 + u/(1-u)).
        json c = json::array();
        c.push_back(checks::ratfun_equal("n - 1 = (1-u)/u", rf(cst(1), u()) - rf(cst(1)), rf(one_minus_u, u())));
        c.push_back(checks::ratfun_equal("(n-1)/n = 1 - u", (rf(cst(1), u()) - rf(cst(1))) * rf(u()),
                                         rf(one_minus_u)));
        c.push_back(checks::ratfun_equal("1/(1-u) = 1 + u/(1-u)", rf(cst(1), one_minus_u),
                                         rf(cst(1)) + rf(u(), one_minus_u)));
        r.steps.push_back(make_step("prop5.log-form",
                                    "equivalent to 1 >= (1-u)/u ln(1 + u/(1-u)) + ln(series(u)) with u = 1/n",
                                    step_method::exact_ratfun, ref, std::move(c)));
    }
    const taylor_bound outer = bound(bound_tag::eq3);
    const taylor_bound inner = bound(bound_tag::eq2);
    {
        // Upper bounds may be substituted: (1-u)/u > 0, u/(1-u) in (0, 1], series tail in (0, 1].
        json c = json::array();
        c.push_back(checks::certificate("1 - u > 0 on (0, 1/8]",
                                        certify_positive(one_minus_u, u_max, positivity_strategy::companion)));
        c.push_back(checks::certificate("1 - 2u > 0 on (0, 1/8], so u/(1-u) <= 1",
                                        certify_positive(cst(1) - cst(2) * u(), u_max, positivity_strategy::companion)));
        c.push_back(checks::certificate("series tail > 0 for u > 0",
                                        certify_positive_on_positive_reals(ratio_series_tail())));
        c.push_back(checks::certificate("1 - series tail > 0 on (0, 1/8]",
                                        certify_positive(cst(1) - ratio_series_tail(), u_max,
                                                         positivity_strategy::companion)));
        c.push_back(checks::rational_compare("Eq3 domain reaches 1", *outer.valid_on.upper, relation::greater_equal,
                                             rational(1)));
        c.push_back(checks::rational_compare("Eq2 domain reaches 1", *inner.valid_on.upper, relation::greater_equal,
                                             rational(1)));
        r.steps.push_back(make_step("prop5.domain", "Eq3 at u/(1-u) and Eq2 at the series tail are in range",
                                    step_method::sign_certificate, ref, std::move(c)));
    }
    const polynomial numerator = ratio_bound_numerator(outer, inner);
    const std::size_t shift = valuation(numerator);
    const scaled_expansion ex = clear_denominators(numerator, std::min<std::size_t>(shift, 6));
    {
        json c = json::array();
        c.push_back(checks::ratfun_equal("two routes agree", ratio_bound_function(outer, inner),
                                         rf(numerator, pow(one_minus_u, 6))));
        c.push_back(checks::rational_compare("u^6 divides the expansion", rational(static_cast<long>(shift)),
                                             relation::greater_equal, rational(6)));
        c.push_back(checks::poly_equal("expansion = u^6 P(u) / K", numerator,
                                       pow(u(), 6) * ex.scaled * (rational(1) / ex.k)));
        c.push_back(checks::positive_integer("K", ex.k));
        c.push_back(checks::integer_coefficients("P has integer coefficients", ex.scaled));
        r.derived_constants["prop5.K"] = ex.k;
        r.steps.push_back(make_step("prop5.expansion",
                                    "1 - (upper bound of the right side) = u^6 P(u) / (K (1-u)^6)",
                                    step_method::exact_ratfun, ref, std::move(c),
                                    json{{"K", rational_to_json(ex.k)}, {"degree_P", ex.scaled.degree()}}));
    }
    {
        json c = json::array();
        c.push_back(checks::rational_compare("P(0) > 0", ex.scaled.coeff(0), relation::greater, rational(0)));
        r.steps.push_back(make_step("prop5.constant-term", "the constant term of P is positive",
                                    step_method::exact_polynomial, ref, std::move(c)));
    }
    {
        json c = json::array();
        json extras;
        try {
            const auto cert = certify_positive(ex.scaled, u_max, positivity_strategy::companion);
            c.push_back(checks::certificate("Q non-increasing and Q(1/8) > 0", cert));
            const rational ratio = *cert.witness_value / ex.k;
            extras["Q_at_1_8"] = rational_to_json(*cert.witness_value);
            extras["soft_check"] = soft_check(ratio, make_rational(36, 100000), opts.soft_tolerance);
        } catch (const cannot_certify &e) {
            extras["error"] = e.what();
        }
        r.steps.push_back(make_step("prop5.companion-positivity",
                                    "Q = constant term + negative terms of P is decreasing with Q(1/8) > 0 (n >= 8)",
                                    step_method::sign_certificate, ref, std::move(c), std::move(extras)));
    }
    const polynomial series = ratio_series();
    for (unsigned long k = 1; k <= 7; ++k) {
        const rational rhs = series(make_rational(1, static_cast<long>(k)));
        // e ((n-1)/n)^(n-1); at n = 1 this uses 0^0 = 1.
        const rational base_power = pow(make_rational(static_cast<long>(k) - 1, static_cast<long>(k)), k - 1);
        json c = json::array();
        c.push_back(adaptive_compare(
            "series(1/n) <= e (n-1)^(n-1) / n^(n-1)",
            [rhs, base_power](mpfr_prec_t bits) {
                return std::pair{rhs, const_e(bits) * ball::from_rational(base_power, bits)};
            },
            relation::less_equal, opts.policy));
        if (k == 1) {
            proof_step s = make_step("prop5.base-case.n1-informational",
                                     "at n = 1 with the convention 0^0 = 1: e >= 1 + 1/2 + 7/24 + 3/16 + 743/5760 + "
                                     "215/2304",
                                     step_method::ball_comparison, ref, std::move(c),
                                     json{{"note", "outside the stated range n > 1; does not gate the result"}});
            s.gating = false;
            r.steps.push_back(std::move(s));
            continue;
        }
        r.steps.push_back(make_step(base_case_id("prop5", k), "inequality holds at n = " + std::to_string(k),
                                    step_method::ball_comparison, ref, std::move(c)));
    }
    return r;
}

/// Second route: theta_n - theta_{n-1} > 0 from the weak lower bound and the
/// ratio series, for n >= 106 by a sign certificate and for 2 <= n <= 105 directly.
inline proof_report verify_theorem1_second(const proof_options &opts = {})
{
    using namespace detail;
    proof_report r;
    r.policy = opts.policy;
    r.append(verify_prop3(opts));
    r.append(verify_corollary3(opts));
    r.append(verify_prop4(opts));
    r.append(verify_prop5(opts));
    const std::string ref = "theta_n - theta_{n-1} = 30 (A_{n-1}^6 ((e (n-1)^(n-1)/n^(n-1))^6 - 1) - 24n^2 + 16n - 5)";
    const polynomial n = u();
    const polynomial m = n - cst(1);
    {
        const polynomial cubic = cst(8) * pow(n, 3) + cst(4) * n * n + n;
        const polynomial shifted = cst(8) * pow(m, 3) + cst(4) * m * m + m;
        const polynomial step{rational(5), rational(-16), rational(24)};
        json c = json::array();
        c.push_back(checks::poly_equal("cubic(n) - cubic(n-1) = 24n^2 - 16n + 5", cubic - shifted, step));
        c.push_back(checks::poly_equal("8(3n^2 - 3n + 1) + 4(2n - 1) + 1 = 24n^2 - 16n + 5",
                                       cst(8) * polynomial{rational(1), rational(-3), rational(3)}
                                           + cst(4) * polynomial{rational(-1), rational(2)} + cst(1),
                                       step));
        // ln A_n - ln A_{n-1} = ln n - n ln n + (n-1) ln(n-1) + 1 = 1 + (n-1) ln(n-1) - (n-1) ln n.
        c.push_back(checks::poly_equal("coefficient of ln n", cst(1) - n, -m));
        c.push_back(checks::poly_equal("coefficient of ln(n-1)", m, m));
        r.steps.push_back(make_step("thm1.second.difference-identity",
                                    "theta_n - theta_{n-1} = 30 [A_{n-1}^6 ((e (n-1)^(n-1)/n^(n-1))^6 - 1) - 24n^2 + "
                                    "16n - 5]",
                                    step_method::exact_polynomial, ref, std::move(c)));
    }
    {
        // Both lower bounds are positive where they are multiplied.
        json c = json::array();
        c.push_back(checks::certificate(
            "t^3 L(1/t) = 8 + 4t + t^2 + t^3/30 - t^4/20 > 0 on (0, 1]",
            certify_positive(polynomial{rational(8), rational(4), rational(1), make_rational(1, 30),
                                        make_rational(-1, 20)},
                             rational(1), positivity_strategy::companion)));
        c.push_back(checks::certificate("series(u) - 1 > 0 for u > 0",
                                        certify_positive_on_positive_reals(ratio_series_tail())));
        r.steps.push_back(make_step("thm1.second.bound-preconditions",
                                    "A_{n-1}^6 >= L(n-1) > 0 and series(1/n)^6 - 1 > 0, so the product of lower bounds "
                                    "is a lower bound",
                                    step_method::sign_certificate, ref, std::move(c)));
    }
    const polynomial expansion = difference_bound_numerator();
    const scaled_expansion ex = clear_denominators(expansion, 0);
    const polynomial &p = ex.scaled;
    {
        json c = json::array();
        c.push_back(checks::ratfun_equal("two routes agree", difference_bound_function(),
                                         rf(expansion, pow(n, 30) * m)));
        c.push_back(checks::poly_equal("expansion = P(n) / K", expansion, p * (rational(1) / ex.k)));
        c.push_back(checks::positive_integer("K", ex.k));
        c.push_back(checks::integer_coefficients("P has integer coefficients", p));
        c.push_back(checks::rational_compare("leading coefficient of P > 0", p.leading(), relation::greater,
                                             rational(0)));
        r.derived_constants["theorem1_second.K"] = ex.k;
        r.steps.push_back(make_step("thm1.second.expansion",
                                    "(theta_n - theta_{n-1})/30 >= P(n) / (K n^30 (n-1))",
                                    step_method::exact_ratfun, ref, std::move(c),
                                    json{{"K", rational_to_json(ex.k)}, {"degree_P", p.degree()}}));
    }
    {
        json c = json::array();
        json extras{{"note", "R is a polynomial in t = 1/n; the usable fact certified here is R(t) >= R(1/106) > 0 "
                             "for 0 < t <= 1/106, i.e. R(1/n) is non-decreasing in n"}};
        try {
            const polynomial q = companion(p, anchor_term::leading);
            const auto deg = static_cast<std::size_t>(p.degree());
            const polynomial rpoly = reverse(q, deg);
            c.push_back(checks::poly_equal("Q(n) = n^deg R(1/n)", reverse(rpoly, deg), q));
            if (!(p - q).is_zero()) {
                c.push_back(checks::certificate("P - Q >= 0 for n > 0", certify_positive_on_positive_reals(p - q)));
            }
            const auto cert = certify_positive(rpoly, make_rational(1, 106), positivity_strategy::companion);
            c.push_back(checks::certificate("R non-increasing in t and R(1/106) > 0", cert));
            extras["R_at_1_106"] = rational_to_json(*cert.witness_value);
            extras["soft_check"] = soft_check(*cert.witness_value / ex.k, make_rational(23, 100000), opts.soft_tolerance);
        } catch (const std::exception &e) {
            extras["error"] = e.what();
        }
        r.steps.push_back(make_step("thm1.second.companion-positivity",
                                    "Q = leading term + negative terms of P satisfies Q(n) = n^29 R(1/n) > 0 for n >= "
                                    "106",
                                    step_method::sign_certificate, ref, std::move(c), std::move(extras)));
    }
    for (unsigned long k = 2; k <= 105; ++k) {
        json c = json::array();
        c.push_back(adaptive_compare(
            "theta_{n-1} < theta_n",
            [k](mpfr_prec_t bits) { return std::pair{theta_at(k - 1, bits), theta_at(k, bits)}; }, relation::less,
            opts.policy));
        r.steps.push_back(make_step(base_case_id("thm1.second", k), "theta_{n-1} < theta_n at n = " + std::to_string(k),
                                    step_method::ball_comparison, ref, std::move(c)));
    }
    return r;
}

} // namespace stirling

#endif
