#ifndef STIRLING_PROOF_CHECK_HPP
#define STIRLING_PROOF_CHECK_HPP

// Replayable checks. A proof step's witness holds a list of these; each one is
// self-contained JSON that evaluate_check() can re-run without recomputing
// anything else. Exact checks are decided by rational arithmetic; interval
// checks compare exact endpoints of serialized balls.

#include <stirling/ball/ball.hpp>
#include <stirling/ball/format.hpp>
#include <stirling/exact/json.hpp>
#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>
#include <stirling/exact/rational_function.hpp>
#include <stirling/exact/sign_certificate.hpp>
#include <stirling/exact/sturm.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace stirling
{

enum class step_status { verified, failed, undecided };

inline std::string_view to_string(step_status s)
{
    switch (s) {
        case step_status::verified:
            return "verified";
        case step_status::failed:
            return "failed";
        case step_status::undecided:
            return "undecided";
    }
    return "";
}

inline step_status step_status_from_string(std::string_view s)
{
    if (s == "verified") {
        return step_status::verified;
    }
    if (s == "failed") {
        return step_status::failed;
    }
    if (s == "undecided") {
        return step_status::undecided;
    }
    throw std::invalid_argument("unknown step status '" + std::string(s) + "'");
}

enum class relation { less, less_equal, equal, greater_equal, greater };

inline std::string_view to_string(relation r)
{
    switch (r) {
        case relation::less:
            return "<";
        case relation::less_equal:
            return "<=";
        case relation::equal:
            return "=";
        case relation::greater_equal:
            return ">=";
        case relation::greater:
            return ">";
    }
    return "";
}

inline relation relation_from_string(std::string_view s)
{
    if (s == "<") {
        return relation::less;
    }
    if (s == "<=") {
        return relation::less_equal;
    }
    if (s == "=") {
        return relation::equal;
    }
    if (s == ">=") {
        return relation::greater_equal;
    }
    if (s == ">") {
        return relation::greater;
    }
    throw std::invalid_argument("unknown relation '" + std::string(s) + "'");
}

inline bool holds(const rational &a, relation r, const rational &b)
{
    switch (r) {
        case relation::less:
            return a < b;
        case relation::less_equal:
            return a <= b;
        case relation::equal:
            return a == b;
        case relation::greater_equal:
            return a >= b;
        case relation::greater:
            return a > b;
    }
    return false;
}

/// Closed interval operand [lo, hi] for interval comparisons.
struct enclosure {
    rational lo;
    rational hi;
};

inline enclosure enclose(const ball &b)
{
    return {b.lower(), b.upper()};
}

inline enclosure enclose(const rational &q)
{
    return {q, q};
}

/// Certified comparison of two enclosures: verified if every pair of points
/// satisfies the relation, failed if no pair does, undecided otherwise.
inline step_status compare(const enclosure &a, relation r, const enclosure &b)
{
    switch (r) {
        case relation::less:
            return a.hi < b.lo ? step_status::verified : (a.lo >= b.hi ? step_status::failed : step_status::undecided);
        case relation::less_equal:
            return a.hi <= b.lo ? step_status::verified : (a.lo > b.hi ? step_status::failed : step_status::undecided);
        case relation::greater:
            return compare(b, relation::less, a);
        case relation::greater_equal:
            return compare(b, relation::less_equal, a);
        case relation::equal:
            if (a.lo == a.hi && b.lo == b.hi) {
                return a.lo == b.lo ? step_status::verified : step_status::failed;
            }
            return (a.hi < b.lo || b.hi < a.lo) ? step_status::failed : step_status::undecided;
    }
    return step_status::undecided;
}

namespace checks
{

inline json poly_equal(std::string label, const polynomial &lhs, const polynomial &rhs)
{
    return json{{"kind", "poly-equal"},
                {"label", std::move(label)},
                {"lhs", polynomial_to_json(lhs)},
                {"rhs", polynomial_to_json(rhs)}};
}

inline json ratfun_equal(std::string label, const rational_function &lhs, const rational_function &rhs)
{
    return json{{"kind", "ratfun-equal"},
                {"label", std::move(label)},
                {"lhs", rational_function_to_json(lhs)},
                {"rhs", rational_function_to_json(rhs)}};
}

inline json rational_compare(std::string label, const rational &lhs, relation r, const rational &rhs)
{
    return json{{"kind", "rational-compare"},
                {"label", std::move(label)},
                {"lhs", rational_to_json(lhs)},
                {"relation", std::string(to_string(r))},
                {"rhs", rational_to_json(rhs)}};
}

inline json operand(const ball &b)
{
    json j{{"lo", rational_to_json(b.lower())}, {"hi", rational_to_json(b.upper())}};
    j["ball"] = ball_to_json(b);
    j["approx"] = format_midpoint(b, 12);
    return j;
}

inline json operand(const rational &q)
{
    return json{{"lo", rational_to_json(q)}, {"hi", rational_to_json(q)}, {"approx", to_decimal(q, 12)}};
}

inline json interval_compare(std::string label, json lhs, relation r, json rhs)
{
    return json{{"kind", "interval-compare"},
                {"label", std::move(label)},
                {"lhs", std::move(lhs)},
                {"relation", std::string(to_string(r))},
                {"rhs", std::move(rhs)}};
}

inline json certificate(std::string label, const sign_certificate &cert)
{
    return json{{"kind", "sign-certificate"}, {"label", std::move(label)}, {"certificate", certificate_to_json(cert)}};
}

inline json root_count(std::string label, const polynomial &p, const rational &a, const rational &b,
                       std::size_t expected)
{
    return json{{"kind", "root-count"},
                {"label", std::move(label)},
                {"poly", polynomial_to_json(p)},
                {"a", rational_to_json(a)},
                {"b", rational_to_json(b)},
                {"expected", expected}};
}

/// q is a positive integer.
inline json positive_integer(std::string label, const rational &q)
{
    return json{{"kind", "positive-integer"}, {"label", std::move(label)}, {"value", rational_to_json(q)}};
}

/// Every coefficient of p is an integer.
inline json integer_coefficients(std::string label, const polynomial &p)
{
    return json{{"kind", "integer-coefficients"}, {"label", std::move(label)}, {"poly", polynomial_to_json(p)}};
}

/// Earlier steps this step relies on: verified when all of them were.
inline json dependency(std::string label, std::size_t verified, std::size_t total)
{
    return json{{"kind", "dependency"}, {"label", std::move(label)}, {"verified", verified}, {"total", total}};
}

} // namespace checks

namespace detail
{

inline enclosure enclosure_from_json(const json &j)
{
    return {rational_from_json(j.at("lo")), rational_from_json(j.at("hi"))};
}

} // namespace detail

/// Re-runs one check from its JSON form.
inline step_status evaluate_check(const json &c)
{
    const std::string kind = c.at("kind").get<std::string>();
    auto verdict = [](bool ok) { return ok ? step_status::verified : step_status::failed; };
    if (kind == "poly-equal") {
        return verdict(polynomial_from_json(c.at("lhs")) == polynomial_from_json(c.at("rhs")));
    }
    if (kind == "ratfun-equal") {
        return verdict(rational_function_from_json(c.at("lhs")) == rational_function_from_json(c.at("rhs")));
    }
    if (kind == "rational-compare") {
        return verdict(holds(rational_from_json(c.at("lhs")), relation_from_string(c.at("relation").get<std::string>()),
                             rational_from_json(c.at("rhs"))));
    }
    if (kind == "interval-compare") {
        return compare(detail::enclosure_from_json(c.at("lhs")), relation_from_string(c.at("relation").get<std::string>()),
                       detail::enclosure_from_json(c.at("rhs")));
    }
    if (kind == "sign-certificate") {
        return verdict(replay(certificate_from_json(c.at("certificate"))));
    }
    if (kind == "root-count") {
        try {
            const auto n = count_roots(polynomial_from_json(c.at("poly")), rational_from_json(c.at("a")),
                                       rational_from_json(c.at("b")));
            return verdict(n == c.at("expected").get<std::size_t>());
        } catch (const std::exception &) {
            return step_status::failed;
        }
    }
    if (kind == "positive-integer") {
        const rational q = rational_from_json(c.at("value"));
        return verdict(is_integer(q) && q > 0);
    }
    if (kind == "integer-coefficients") {
        const polynomial p = polynomial_from_json(c.at("poly"));
        bool ok = true;
        for (const auto &q : p.coefficients()) {
            ok = ok && is_integer(q);
        }
        return verdict(ok);
    }
    if (kind == "dependency") {
        return verdict(c.at("verified").get<std::size_t>() == c.at("total").get<std::size_t>());
    }
    throw std::invalid_argument("unknown check kind '" + kind + "'");
}

/// failed dominates undecided, which dominates verified.
inline step_status combine(step_status a, step_status b)
{
    if (a == step_status::failed || b == step_status::failed) {
        return step_status::failed;
    }
    if (a == step_status::undecided || b == step_status::undecided) {
        return step_status::undecided;
    }
    return step_status::verified;
}

inline step_status evaluate_checks(const json &list)
{
    step_status s = step_status::verified;
    for (const auto &c : list) {
        s = combine(s, evaluate_check(c));
    }
    return s;
}

} // namespace stirling

#endif
