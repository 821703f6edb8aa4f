// Acceptance gate: one line per criterion, nonzero exit if any criterion fails.

#include "support/generators.hpp"

#include <stirling/stirling.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace stirling;

namespace
{

using clock_type = std::chrono::steady_clock;

struct verdict {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string &what)
    {
        if (!ok) {
            pass = false;
            detail << " [missed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int id, const std::string &title, double limit_seconds, const std::function<void(verdict &)> &body)
{
    verdict v;
    const auto start = clock_type::now();
    try {
        body(v);
    } catch (const std::exception &e) {
        v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(clock_type::now() - start).count();
    if (limit_seconds > 0) {
        std::ostringstream lim;
        lim << "runtime " << secs << "s < " << limit_seconds << "s";
        v.require(secs < limit_seconds, lim.str());
    }
    failures += v.pass ? 0 : 1;
    std::printf("[%s] %2d %s (%.2fs)%s\n", v.pass ? "PASS" : "FAIL", id, title.c_str(), secs, v.detail.str().c_str());
    std::fflush(stdout);
}

rational q(long a, long b = 1)
{
    return make_rational(a, b);
}

/// First `digits` decimals of x, truncated toward zero.
std::string truncated(const rational &x, int digits)
{
    integer scale = 1;
    for (int i = 0; i < digits; ++i) {
        scale *= 10;
    }
    const rational scaled_q = x * scale;
    const integer scaled = scaled_q.get_num() / scaled_q.get_den();
    std::string s = scaled.get_str();
    s.insert(0, static_cast<std::size_t>(std::max<long>(0, digits + 1 - static_cast<long>(s.size()))), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    return s;
}

bool step_ok(const proof_report &r, const std::string &id)
{
    const proof_step *s = r.find(id);
    return s != nullptr && s->verified();
}

const json &witness(const proof_report &r, const std::string &id)
{
    const proof_step *s = r.find(id);
    if (s == nullptr) {
        throw std::runtime_error("missing step " + id);
    }
    return s->witness;
}

void collect_certificates(const json &j, std::vector<sign_certificate> &out)
{
    if (j.is_object()) {
        if (j.value("kind", "") == "sign-certificate" && j.contains("certificate")) {
            out.push_back(certificate_from_json(j.at("certificate")));
        }
        for (const auto &[k, v] : j.items()) {
            collect_certificates(v, out);
        }
    } else if (j.is_array()) {
        for (const auto &v : j) {
            collect_certificates(v, out);
        }
    }
}

} // namespace

int main()
{
    const precision_policy policy;

    criterion(1, "theta_1..3 match 0.3359, 0.5117, 0.6305 at radius < 1e-6", 1.0, [&](verdict &v) {
        const char *expected[] = {"0.3359", "0.5117", "0.6305"};
        for (unsigned long n = 1; n <= 3; ++n) {
            const ball t = theta(n, policy, q(1, 1000000));
            v.require(t.rad_rational() < q(1, 1000000), "radius n=" + std::to_string(n));
            // Printed digits are truncated; the whole enclosure must agree on them.
            v.require(truncated(t.mid_rational(), 4) == expected[n - 1], "midpoint digits n=" + std::to_string(n));
            v.require(truncated(t.lower(), 4) == expected[n - 1] && truncated(t.upper(), 4) == expected[n - 1],
                      "enclosure digits n=" + std::to_string(n));
        }
    });

    criterion(2, "certified theta_n < theta_{n+1} for n = 1..50", 30.0, [&](verdict &v) {
        for (unsigned long n = 1; n <= 50; ++n) {
            v.require(monotone_check(n, policy) == outcome::holds, "n=" + std::to_string(n));
        }
    });

    criterion(3, "alpha_n < theta_n < beta_n for n = 1..1000", 180.0, [&](verdict &v) {
        for (unsigned long n = 1; n <= 1000; ++n) {
            v.require(sandwich_check(n, policy) == outcome::holds, "n=" + std::to_string(n));
        }
    });

    criterion(4, "staircase equivalence, 5n^2-11n-11 >= 0 for n >= 3, beta_3 <= alpha_4", 1.0, [&](verdict &v) {
        const proof_report r = verify_prop2();
        v.require(r.verified(), "prop2 report verified");
        v.require(step_ok(r, "prop2.equivalence"), "equivalence");
        v.require(step_ok(r, "prop2.positivity"), "positivity");
        v.require(witness(r, "prop2.positivity").at("witness_at_3") == 1, "witness 1 at n=3");
        const auto s = staircase_check(3);
        v.require(s.beta_n == q(25, 36) && s.alpha_next == q(89, 128) && s.beta_n <= s.alpha_next, "25/36 <= 89/128");
    });

    criterion(5, "log-ratio bound: numerator, bracket value 63602/16807, base cases n = 1..6", 0, [&](verdict &v) {
        const proof_report r = verify_prop3();
        v.require(step_ok(r, "prop3.substitution"), "numerator identity");
        v.require(step_ok(r, "prop3.expansion"), "expansion");
        const polynomial numerator{q(0), q(360), q(1080), q(1110), q(420), q(27), q(-3), q(-1)};
        bool matched = false;
        for (const auto &c : witness(r, "prop3.substitution").at("checks")) {
            if (c.at("kind") == "poly-equal") {
                matched = polynomial_from_json(c.at("rhs")) == numerator
                          && polynomial_from_json(c.at("lhs")) == numerator;
            }
        }
        v.require(matched, "numerator reproduced exactly");
        const rational value = rational_from_json(witness(r, "prop3.bracket-positivity").at("witness_value"));
        v.require(value == q(63602, 16807), "bracket value");
        v.require(to_decimal(value, 3) == "3.78e0", "rounds to 3.78");
        v.require(step_ok(r, "prop3.bracket-positivity"), "bracket certificate");
        for (int n = 1; n <= 6; ++n) {
            v.require(step_ok(r, "prop3.base-case.n" + std::to_string(n)), "base case n=" + std::to_string(n));
        }
    });

    criterion(6, "exponential expansion coefficients, residual factor, 23/25, base cases n = 1..4", 0, [&](verdict &v) {
        const proof_report r = verify_prop4();
        v.require(step_ok(r, "prop4.composition"), "composition matches printed coefficients");
        const polynomial composed = compose(bound(bound_tag::eq5).poly, detail::exp_argument());
        const rational printed[] = {q(-11, 1920),   q(-1, 480),       q(-1, 4800), q(1, 14400),
                                    q(1, 57600),    q(-1, 1296000),   q(-1, 2592000), q(1, 311040000)};
        const std::size_t degrees[] = {4, 5, 6, 7, 8, 9, 10, 12};
        for (std::size_t i = 0; i < 8; ++i) {
            v.require(composed.coeff(degrees[i]) == printed[i], "u^" + std::to_string(degrees[i]));
        }
        v.require(composed.coeff(0) == 1 && composed.coeff(1) == q(1, 2) && composed.coeff(2) == q(1, 8)
                      && composed.coeff(3) == q(1, 240) && composed.coeff(11) == 0,
                  "low-order terms");
        v.require(step_ok(r, "prop4.cancellation"), "residual factorization");
        v.require(rational_from_json(witness(r, "prop4.residual-positivity").at("witness_value")) == q(23, 25),
                  "value 23/25 at u = 1/5");
        v.require(step_ok(r, "prop4.residual-positivity"), "residual certificate");
        for (int n = 1; n <= 4; ++n) {
            v.require(step_ok(r, "prop4.base-case.n" + std::to_string(n)), "base case n=" + std::to_string(n));
        }
    });

    criterion(7, "ratio bound: K integer, Q(1/8)/K > 0 and ~0.00036, base cases n = 2..7", 0, [&](verdict &v) {
        const proof_report r = verify_prop5();
        const rational k = r.derived_constants.at("prop5.K");
        v.require(is_integer(k) && k > 0, "K positive integer");
        v.require(step_ok(r, "prop5.companion-positivity"), "Q(1/8) > 0 certificate");
        const json &soft = witness(r, "prop5.companion-positivity").at("soft_check");
        v.require(rational_from_json(soft.at("value")) > 0, "Q(1/8)/K > 0");
        v.require(soft.at("within_tolerance").get<bool>(), "within 10% of 0.00036");
        for (int n = 2; n <= 7; ++n) {
            v.require(step_ok(r, "prop5.base-case.n" + std::to_string(n)), "base case n=" + std::to_string(n));
        }
        v.require(step_ok(r, "prop5.base-case.n1-informational"), "n = 1 informational");
        v.require(!r.find("prop5.base-case.n1-informational")->gating, "n = 1 not gating");
        v.require(r.verified(), "report verified");
    });

    criterion(8, "second proof: identity, R(1/106)/K > 0 and ~0.00023, n = 2..105, verify all < 5 min", 300.0,
              [&](verdict &v) {
                  const proof_report r = verify_theorem1_second();
                  v.require(step_ok(r, "thm1.second.difference-identity"), "difference identity");
                  v.require(step_ok(r, "thm1.second.expansion"), "expansion");
                  v.require(step_ok(r, "thm1.second.companion-positivity"), "R(1/106) > 0 certificate");
                  const json &soft = witness(r, "thm1.second.companion-positivity").at("soft_check");
                  v.require(rational_from_json(soft.at("value")) > 0, "R(1/106)/K > 0");
                  v.require(soft.at("within_tolerance").get<bool>(), "within 10% of 0.00023");
                  for (int n = 2; n <= 105; ++n) {
                      v.require(step_ok(r, "thm1.second.base-case.n" + std::to_string(n)),
                                "base case n=" + std::to_string(n));
                  }
                  const auto start = clock_type::now();
                  const int status = std::system(STIRLING_CLI_PATH " verify all > /dev/null");
                  const double secs = std::chrono::duration<double>(clock_type::now() - start).count();
                  v.require(WIFEXITED(status) && WEXITSTATUS(status) == 0, "verify all exits 0");
                  v.require(secs < 300.0, "verify all under 5 min");
              });

    criterion(9, "property suites: Taylor sampling, ball containment, companion vs Sturm, replay", 0, [&](verdict &v) {
        testkit::generator g(2024);
        for (bound_tag t : {bound_tag::eq2, bound_tag::eq3, bound_tag::eq4, bound_tag::eq5}) {
            const taylor_bound b = bound(t);
            const rational lo = b.valid_on.lower + (b.valid_on.lower_closed ? 0 : q(1, 1000));
            const rational hi = b.valid_on.upper ? *b.valid_on.upper : q(40);
            for (int i = 0; i < 1000; ++i) {
                const rational x = g.rational_in(lo, hi, 100000);
                if (check_bound_at(b, x, 128) == outcome::fails) {
                    v.require(false, std::string(to_string(t)) + " fails at " + x.get_str());
                }
            }
        }
        for (int trial = 0; trial < 200; ++trial) {
            const mpfr_prec_t bits = 32 + 32 * g.integer_in(0, 4);
            rational exact = g.small_rational(100);
            ball b = ball::from_rational(exact, bits);
            ball coarse = ball::from_rational(exact, bits / 2 + 16);
            for (int step = 0; step < 10; ++step) {
                const rational y = g.small_rational(100);
                if (g.integer_in(0, 1) == 0) {
                    exact += y;
                    b += ball::from_rational(y, bits);
                    coarse += ball::from_rational(y, bits / 2 + 16);
                } else {
                    exact *= y;
                    b *= ball::from_rational(y, bits);
                    coarse *= ball::from_rational(y, bits / 2 + 16);
                }
            }
            v.require(b.contains(exact) && coarse.contains(exact), "containment");
            v.require(b.overlaps(coarse), "nesting");
        }
        const proof_report all = verify(verify_target::all, proof_options{{}, 50, q(1, 10)});
        std::vector<sign_certificate> certs;
        collect_certificates(report_to_json(all).at("steps"), certs);
        v.require(certs.size() > 10, "certificates collected");
        for (const auto &c : certs) {
            const polynomial s = detail::strip_power_of_u(c.poly);
            const rational upper = c.range.upper ? *c.range.upper : cauchy_root_bound(s) + 1;
            v.require(replay(c) && count_roots(s, q(0), upper) == 0, "Sturm agrees on " + c.poly.to_string());
        }
        const proof_report back = report_from_json(json::parse(report_to_json(all).dump()));
        const auto statuses = replay(back);
        for (std::size_t i = 0; i < statuses.size(); ++i) {
            v.require(statuses[i] == all.steps[i].status, "replay " + all.steps[i].id);
        }
        v.require(report_to_json(back).dump() == report_to_json(all).dump(), "round trip identical");
    });

    criterion(10, "misprinted x^3/3 exponential bound fails the coefficient match", 0, [&](verdict &v) {
        taylor_bound misprint = bound(bound_tag::eq5);
        misprint.poly = polynomial{q(1), q(1), q(1, 2), q(1, 3), q(1, 24)};
        const proof_report r = verify_prop4({}, misprint);
        v.require(r.find("prop4.composition")->status == step_status::failed, "composition step failed");
        v.require(!r.verified(), "report not verified");
        v.require(verify_prop4().find("prop4.composition")->verified(), "correct bound still passes");
    });

    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? 0 : 1;
}
