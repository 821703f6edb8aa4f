#include <stirling/proof/verify.hpp>

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace stirling;

namespace
{

rational q(long a, long b = 1)
{
    return make_rational(a, b);
}

proof_options quick()
{
    proof_options o;
    o.sandwich_max = 30;
    return o;
}

/// Every sign certificate found anywhere in a report's checks.
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

const proof_report &second_report()
{
    static const proof_report r = verify_theorem1_second(quick());
    return r;
}

const json &witness(const proof_report &r, const std::string &id)
{
    const proof_step *s = r.find(id);
    if (s == nullptr) {
        throw std::runtime_error("missing step " + id);
    }
    return s->witness;
}

} // namespace

TEST(Checks, CompareEnclosures)
{
    EXPECT_EQ(compare({q(1), q(2)}, relation::less, {q(3), q(4)}), step_status::verified);
    EXPECT_EQ(compare({q(1), q(3)}, relation::less, {q(2), q(4)}), step_status::undecided);
    EXPECT_EQ(compare({q(5), q(6)}, relation::less, {q(3), q(4)}), step_status::failed);
    EXPECT_EQ(compare({q(2), q(2)}, relation::less_equal, {q(2), q(2)}), step_status::verified);
    EXPECT_EQ(compare({q(2), q(2)}, relation::equal, {q(2), q(2)}), step_status::verified);
    EXPECT_EQ(compare({q(5), q(6)}, relation::greater, {q(3), q(4)}), step_status::verified);
}

TEST(Checks, Combine)
{
    EXPECT_EQ(combine(step_status::verified, step_status::undecided), step_status::undecided);
    EXPECT_EQ(combine(step_status::undecided, step_status::failed), step_status::failed);
    EXPECT_EQ(combine(step_status::verified, step_status::verified), step_status::verified);
}

TEST(Checks, EvaluateEachKind)
{
    const polynomial p{q(1), q(2)};
    EXPECT_EQ(evaluate_check(checks::poly_equal("x", p, p)), step_status::verified);
    EXPECT_EQ(evaluate_check(checks::poly_equal("x", p, p + p)), step_status::failed);
    EXPECT_EQ(evaluate_check(checks::rational_compare("x", q(1), relation::less, q(2))), step_status::verified);
    EXPECT_EQ(evaluate_check(checks::positive_integer("x", q(4))), step_status::verified);
    EXPECT_EQ(evaluate_check(checks::positive_integer("x", q(1, 2))), step_status::failed);
    EXPECT_EQ(evaluate_check(checks::positive_integer("x", q(-4))), step_status::failed);
    EXPECT_EQ(evaluate_check(checks::integer_coefficients("x", p)), step_status::verified);
    EXPECT_EQ(evaluate_check(checks::integer_coefficients("x", polynomial{q(1, 2)})), step_status::failed);
    EXPECT_EQ(evaluate_check(checks::dependency("x", 3, 3)), step_status::verified);
    EXPECT_EQ(evaluate_check(checks::dependency("x", 2, 3)), step_status::failed);
    EXPECT_EQ(evaluate_check(checks::root_count("x", polynomial{q(-2), q(0), q(1)}, q(0), q(2), 1)),
              step_status::verified);
    EXPECT_EQ(evaluate_check(checks::root_count("x", polynomial{q(-1), q(1)}, q(1), q(2), 0)), step_status::failed);
    EXPECT_THROW(evaluate_check(json{{"kind", "nope"}}), std::invalid_argument);
    EXPECT_EQ(make_step("s", "c", step_method::exact_polynomial, "r", json::array()).status, step_status::failed);
}

TEST(Prop2, Steps)
{
    const proof_report r = verify_prop2();
    EXPECT_TRUE(r.verified());
    ASSERT_NE(r.find("prop2.equivalence"), nullptr);
    EXPECT_EQ(r.find("prop2.equivalence")->method, step_method::exact_ratfun);
    EXPECT_EQ(witness(r, "prop2.positivity").at("witness_at_3"), 1);
    const json &fixture = witness(r, "prop2.fixture.n2");
    EXPECT_EQ(fixture.at("witness"), -13);
    EXPECT_EQ(fixture.at("fixture"), "expected-fail");
}

TEST(Prop3, Steps)
{
    const proof_report r = verify_prop3();
    EXPECT_TRUE(r.verified());
    const json &w = witness(r, "prop3.bracket-positivity");
    EXPECT_EQ(rational_from_json(w.at("witness_value")), q(63602, 16807));
    EXPECT_EQ(w.at("witness_approx"), "3.784e0");
    EXPECT_EQ(witness(r, "prop3.expansion").at("slack"), "identically zero");
    for (int n = 1; n <= 6; ++n) {
        EXPECT_TRUE(r.find("prop3.base-case.n" + std::to_string(n))->verified()) << n;
    }
    EXPECT_EQ(r.find("prop3.base-case.n7"), nullptr);
}

TEST(Corollary3, Steps)
{
    const proof_report r = verify_corollary3();
    EXPECT_TRUE(r.verified());
    for (const char *id : {"corollary3.telescoping", "corollary3.exponent-algebra", "corollary3.spot.n1",
                           "corollary3.spot.n5", "corollary3.spot.n50"}) {
        ASSERT_NE(r.find(id), nullptr) << id;
        EXPECT_TRUE(r.find(id)->verified()) << id;
    }
}

TEST(Prop4, Steps)
{
    const proof_report r = verify_prop4();
    EXPECT_TRUE(r.verified());
    const json &c = witness(r, "prop4.composition");
    EXPECT_EQ(rational_from_json(c.at("u4_coefficient")), q(-11, 1920));
    EXPECT_EQ(rational_from_json(c.at("u12_coefficient")), q(1, 311040000));
    EXPECT_EQ(rational_from_json(witness(r, "prop4.residual-positivity").at("witness_value")), q(23, 25));
    for (int n = 1; n <= 4; ++n) {
        EXPECT_TRUE(r.find("prop4.base-case.n" + std::to_string(n))->verified()) << n;
    }
}

TEST(Prop4, MisprintedExponentialFailsComposition)
{
    taylor_bound misprint = bound(bound_tag::eq5);
    misprint.poly = polynomial{q(1), q(1), q(1, 2), q(1, 3), q(1, 24)};
    const proof_report r = verify_prop4({}, misprint);
    EXPECT_EQ(r.find("prop4.composition")->status, step_status::failed);
    EXPECT_FALSE(r.verified());
}

TEST(Prop5, Steps)
{
    const proof_report r = verify_prop5();
    EXPECT_TRUE(r.verified());
    // Frozen from an independent sympy expansion.
    EXPECT_EQ(r.derived_constants.at("prop5.K"), rational(integer("7101178668122112000000")));
    const json &e = witness(r, "prop5.expansion");
    EXPECT_EQ(e.at("degree_P"), 25);
    const json &soft = witness(r, "prop5.companion-positivity").at("soft_check");
    EXPECT_TRUE(soft.at("within_tolerance").get<bool>());
    EXPECT_EQ(soft.at("value_approx"), "3.61525e-4");
    for (int n = 2; n <= 7; ++n) {
        EXPECT_TRUE(r.find("prop5.base-case.n" + std::to_string(n))->verified()) << n;
    }
    const proof_step *n1 = r.find("prop5.base-case.n1-informational");
    ASSERT_NE(n1, nullptr);
    EXPECT_FALSE(n1->gating);
    EXPECT_TRUE(n1->verified());
}

TEST(Prop5, ExpansionMatchesOracle)
{
    // N(u) = u^6 P(u) / K with P(0) = 479837863437926400000 (sympy).
    const polynomial n = detail::ratio_bound_numerator(bound(bound_tag::eq3), bound(bound_tag::eq2));
    EXPECT_EQ(valuation(n), 6U);
    EXPECT_EQ(n.coeff(6), q(196163, 2903040));
    const auto s = detail::clear_denominators(n, 6);
    EXPECT_EQ(s.scaled.coeff(0), rational(integer("479837863437926400000")));
    EXPECT_EQ(s.scaled.degree(), 25);
}

TEST(SecondProof, Steps)
{
    const proof_report &r = second_report();
    EXPECT_TRUE(r.verified());
    EXPECT_EQ(r.derived_constants.at("theorem1_second.K"), rational(integer("140238134154457251840000000")));
    const json &soft = witness(r, "thm1.second.companion-positivity").at("soft_check");
    EXPECT_TRUE(soft.at("within_tolerance").get<bool>());
    EXPECT_EQ(soft.at("value_approx"), "2.30389e-4");
    for (int n = 2; n <= 105; ++n) {
        const proof_step *s = r.find("thm1.second.base-case.n" + std::to_string(n));
        ASSERT_NE(s, nullptr) << n;
        EXPECT_TRUE(s->verified()) << n;
    }
    EXPECT_TRUE(r.find("thm1.second.difference-identity")->verified());
}

TEST(SecondProof, ExpansionMatchesOracle)
{
    const auto s = detail::clear_denominators(detail::difference_bound_numerator(), 0);
    EXPECT_EQ(s.scaled.degree(), 29);
    EXPECT_EQ(s.scaled.leading(), rational(integer("4674604471815241728000000")));
    // The companion bound is not yet positive at n = 105.
    const polynomial rr = reverse(companion(s.scaled, anchor_term::leading), 29);
    EXPECT_LT(rr(q(1, 105)), 0);
    EXPECT_GT(rr(q(1, 106)), 0);
}

TEST(FirstProof, Report)
{
    const proof_report r = verify_theorem1_first(quick());
    EXPECT_TRUE(r.verified());
    const json &values = witness(r, "thm1.first.base-cases").at("values");
    EXPECT_EQ(values.at("theta_1"), "0.3359");
    EXPECT_EQ(values.at("theta_3"), "0.6305");
    EXPECT_EQ(witness(r, "thm1.first.sandwich").at("checks").size(), 60U);
}

TEST(Report, ReplayIdempotence)
{
    const proof_report &r = second_report();
    const json j = report_to_json(r);
    const proof_report back = report_from_json(json::parse(j.dump()));
    const auto statuses = replay(back);
    ASSERT_EQ(statuses.size(), r.steps.size());
    for (std::size_t i = 0; i < statuses.size(); ++i) {
        EXPECT_EQ(statuses[i], r.steps[i].status) << r.steps[i].id;
    }
    EXPECT_EQ(report_to_json(back).dump(), j.dump());
    EXPECT_EQ(replay(back), replay(report_from_json(report_to_json(back))));
}

TEST(Report, TamperedWitnessIsCaught)
{
    proof_report r = verify_prop4();
    proof_step &s = const_cast<proof_step &>(*r.find("prop4.residual-positivity"));
    s.witness["checks"][0]["certificate"]["witness_value"] = rational_to_json(q(24, 25));
    EXPECT_EQ(replay(r)[static_cast<std::size_t>(&s - r.steps.data())], step_status::failed);
}

TEST(Report, Deterministic)
{
    const std::string a = report_to_json(verify_theorem1_first(quick())).dump(2);
    const std::string b = report_to_json(verify_theorem1_first(quick())).dump(2);
    EXPECT_EQ(a, b);
}

TEST(Report, SchemaFields)
{
    const json j = report_to_json(verify_prop2());
    for (const char *k : {"tool_version", "policy", "steps", "derived_constants", "overall"}) {
        EXPECT_TRUE(j.contains(k)) << k;
    }
    EXPECT_EQ(j.at("policy").at("max_bits"), 16384);
    for (const auto &s : j.at("steps")) {
        for (const char *k : {"id", "claim", "method", "status", "witness", "paper_ref"}) {
            EXPECT_TRUE(s.contains(k)) << k;
        }
    }
    EXPECT_EQ(j.at("overall"), "verified");
}

TEST(Report, CompanionCertificatesAgreeWithSturm)
{
    // Every certificate in the proof corpus: no root of the u^k-stripped polynomial in (0, u_max).
    std::vector<sign_certificate> certs;
    collect_certificates(report_to_json(second_report()).at("steps"), certs);
    collect_certificates(report_to_json(verify_prop2()).at("steps"), certs);
    ASSERT_GT(certs.size(), 10U);
    for (const auto &c : certs) {
        EXPECT_TRUE(replay(c));
        const polynomial s = detail::strip_power_of_u(c.poly);
        if (c.range.upper) {
            EXPECT_EQ(count_roots(s, rational(0), *c.range.upper), 0U) << c.poly;
        } else {
            EXPECT_EQ(count_roots(s, rational(0), cauchy_root_bound(s) + 1), 0U) << c.poly;
        }
    }
}

TEST(Verify, Targets)
{
    EXPECT_EQ(parse_verify_target("theorem1-second"), verify_target::theorem1_second);
    EXPECT_FALSE(parse_verify_target("bogus").has_value());
    for (auto t : verify_target_names) {
        EXPECT_EQ(to_string(*parse_verify_target(t)), t);
    }
}

TEST(Verify, AllMergesBothRoutes)
{
    const proof_report r = verify(verify_target::all, quick());
    EXPECT_TRUE(r.verified());
    EXPECT_NE(r.find("thm1.first.sandwich"), nullptr);
    EXPECT_NE(r.find("thm1.second.base-case.n105"), nullptr);
    std::set<std::string> ids;
    for (const auto &s : r.steps) {
        EXPECT_TRUE(ids.insert(s.id).second) << "duplicate " << s.id;
    }
}

TEST(Verify, ExhaustionIsUndecidedNotFailed)
{
    proof_options o = quick();
    o.policy = precision_policy{64, 64, 2};
    o.sandwich_max = 3000;
    // Not decidable at 64 bits for large n: the envelope gap shrinks like 1/n^2
    // while theta's radius grows with the cancellation.
    const proof_report r = verify_theorem1_first(o);
    const proof_step *s = r.find("thm1.first.sandwich");
    EXPECT_EQ(s->status, step_status::undecided);
    EXPECT_TRUE(r.any_undecided());
}
