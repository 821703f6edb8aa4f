#ifndef STIRLING_PROOF_FIRST_PROOF_HPP
#define STIRLING_PROOF_FIRST_PROOF_HPP

// Monotonicity of theta_n through the rational envelope
//   alpha_n < theta_n < beta_n
// and the staircase beta_n <= alpha_{n+1} for n >= 3, which chains into
//   theta_n < beta_n <= alpha_{n+1} < theta_{n+1}.
// The envelope itself is taken as known; it is certified numerically for
// 1 <= n <= sandwich_max.

#include <stirling/exact/sign_certificate.hpp>
#include <stirling/exact/sturm.hpp>
#include <stirling/proof/common.hpp>
#include <stirling/ramanujan/theta.hpp>

#include <string>

namespace stirling
{

namespace detail
{

/// 5n^2 - 11n - 11
inline polynomial staircase_polynomial()
{
    return polynomial{rational(-11), rational(-11), rational(5)};
}

/// alpha_n and beta_n as rational functions of n.
inline rational_function alpha_function(const polynomial &n)
{
    return rf(cst(1)) - rf(cst(11, 8), n) + rf(cst(5, 8), n * n);
}

inline rational_function beta_function(const polynomial &n)
{
    return rf(cst(1)) - rf(cst(11, 8), n) + rf(cst(11, 8), n * n);
}

} // namespace detail

/// Staircase lemma: beta_n <= alpha_{n+1} for n >= 3.
inline proof_report verify_prop2(const proof_options &opts = {})
{
    using namespace detail;
    proof_report r;
    r.policy = opts.policy;
    const polynomial n = u();
    const polynomial np1 = n + cst(1);
    const polynomial p = staircase_polynomial();
    const std::string ref = "staircase lemma: beta_n <= alpha_{n+1} iff 0 <= 5n^2 - 11n - 11";

    {
        // alpha_{n+1} - beta_n = (5n^2 - 11n - 11) / (8 n^2 (n+1)^2); the denominator is positive for n > 0.
        const polynomial den = cst(8) * n * n * np1 * np1;
        json c = json::array();
        c.push_back(checks::ratfun_equal("alpha_{n+1} - beta_n", alpha_function(np1) - beta_function(n), rf(p, den)));
        c.push_back(checks::certificate("8 n^2 (n+1)^2 > 0 for n > 0", certify_positive_on_positive_reals(den)));
        r.steps.push_back(make_step("prop2.equivalence",
                                    "beta_n <= alpha_{n+1} is equivalent to 0 <= 5n^2 - 11n - 11 for n >= 1",
                                    step_method::exact_ratfun, ref, std::move(c)));
    }
    {
        // No root in (3, B) with B a Cauchy bound, positive at 3, positive leading coefficient.
        rational bound = cauchy_root_bound(p);
        while (p(bound) == 0) {
            bound += 1;
        }
        json c = json::array();
        c.push_back(checks::rational_compare("p(3)", p(rational(3)), relation::equal, rational(1)));
        c.push_back(checks::rational_compare("p(3) > 0", p(rational(3)), relation::greater, rational(0)));
        c.push_back(checks::rational_compare("leading coefficient > 0", p.leading(), relation::greater, rational(0)));
        c.push_back(checks::rational_compare("Cauchy bound above 3", bound, relation::greater, rational(3)));
        c.push_back(checks::root_count("no root of p in (3, B)", p, rational(3), bound, 0));
        json extras{{"root_bound", rational_to_json(bound)}, {"witness_at_3", 1}};
        r.steps.push_back(make_step("prop2.positivity", "5n^2 - 11n - 11 >= 0 for every real n >= 3",
                                    step_method::sign_certificate, ref, std::move(c), std::move(extras)));
    }
    {
        const auto s = staircase_check(3);
        json c = json::array();
        c.push_back(checks::rational_compare("beta_3", s.beta_n, relation::equal, make_rational(25, 36)));
        c.push_back(checks::rational_compare("alpha_4", s.alpha_next, relation::equal, make_rational(89, 128)));
        c.push_back(checks::rational_compare("beta_3 <= alpha_4", s.beta_n, relation::less_equal, s.alpha_next));
        r.steps.push_back(make_step("prop2.staircase.n3", "beta_3 = 25/36 <= alpha_4 = 89/128",
                                    step_method::exact_polynomial, ref, std::move(c)));
    }
    {
        // Expected-fail fixture: the staircase genuinely breaks at n = 2, which is
        // why the chain starts at 3. The check verifies the failure.
        const auto s = staircase_check(2);
        json c = json::array();
        c.push_back(checks::rational_compare("5*4 - 22 - 11", rational(s.witness), relation::equal, rational(-13)));
        c.push_back(checks::rational_compare("witness negative", rational(s.witness), relation::less, rational(0)));
        c.push_back(checks::rational_compare("beta_2 > alpha_3", s.beta_n, relation::greater, s.alpha_next));
        json extras{{"fixture", "expected-fail"}, {"n", 2}, {"witness", -13}};
        r.steps.push_back(make_step("prop2.fixture.n2",
                                    "staircase fails at n = 2 (witness -13 < 0), so the chain starts at n = 3",
                                    step_method::exact_polynomial, ref, std::move(c), std::move(extras)));
    }
    return r;
}

/// First route: envelope + staircase + base values theta_1 < theta_2 < theta_3.
inline proof_report verify_theorem1_first(const proof_options &opts = {})
{
    proof_report r;
    r.policy = opts.policy;
    const std::string ref = "theta_n < beta_n <= alpha_{n+1} < theta_{n+1}";
    {
        json c = json::array();
        for (unsigned long n = 1; n <= opts.sandwich_max; ++n) {
            const auto [alpha, beta] = hirschhorn_bounds(n);
            const std::string tag = "n=" + std::to_string(n);
            c.push_back(detail::adaptive_compare(
                "alpha < theta, " + tag,
                [n, alpha = alpha](mpfr_prec_t bits) { return std::pair{alpha, theta_at(n, bits)}; }, relation::less,
                opts.policy));
            c.push_back(detail::adaptive_compare(
                "theta < beta, " + tag,
                [n, beta = beta](mpfr_prec_t bits) { return std::pair{theta_at(n, bits), beta}; }, relation::less,
                opts.policy));
        }
        json extras{{"range", {{"from", 1}, {"to", opts.sandwich_max}}},
                    {"note", "envelope certified on this range; taken as known beyond it"}};
        r.steps.push_back(make_step("thm1.first.sandwich",
                                    "alpha_n < theta_n < beta_n for 1 <= n <= " + std::to_string(opts.sandwich_max),
                                    step_method::ball_comparison, ref, std::move(c),
                                    std::move(extras)));
    }
    r.append(verify_prop2(opts));
    {
        json c = json::array();
        json values = json::object();
        for (unsigned long n = 1; n <= 2; ++n) {
            c.push_back(detail::adaptive_compare(
                "theta_" + std::to_string(n) + " < theta_" + std::to_string(n + 1),
                [n](mpfr_prec_t bits) { return std::pair{theta_at(n, bits), theta_at(n + 1, bits)}; },
                relation::less, opts.policy));
        }
        for (unsigned long n = 1; n <= 3; ++n) {
            values["theta_" + std::to_string(n)] = format_midpoint(theta(n, opts.policy), 4);
        }
        r.steps.push_back(make_step("thm1.first.base-cases", "theta_1 < theta_2 < theta_3",
                                    step_method::ball_comparison, ref, std::move(c),
                                    json{{"values", values}}));
    }
    return r;
}

} // namespace stirling

#endif
