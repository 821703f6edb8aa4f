#ifndef STIRLING_EXACT_SIGN_CERTIFICATE_HPP
#define STIRLING_EXACT_SIGN_CERTIFICATE_HPP

#include <stirling/exact/json.hpp>
#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>
#include <stirling/exact/sturm.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stirling
{

/// Positivity could not be established. Not a disproof.
struct cannot_certify : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The anchor term required by companion() is not positive.
struct anchor_not_positive : std::domain_error {
    using std::domain_error::domain_error;
};

enum class anchor_term { constant, leading };

/// Q = anchor term of p plus every negative-coefficient term of p.
///
/// For u >= 0 this gives Q(u) <= p(u). With the constant anchor every
/// non-constant term of Q is negative, so Q is non-increasing on u > 0; with
/// the leading anchor, u^deg * Q(1/u) has the same shape in 1/u.
inline polynomial companion(const polynomial &p, anchor_term anchor)
{
    if (p.is_zero()) {
        throw anchor_not_positive("companion: zero polynomial");
    }
    const auto &c = p.coefficients();
    const std::size_t anchor_index = anchor == anchor_term::constant ? 0 : c.size() - 1;
    if (!(c[anchor_index] > 0)) {
        throw anchor_not_positive("companion: anchor coefficient is not positive");
    }
    std::vector<rational> out(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (k == anchor_index || c[k] < 0) {
            out[k] = c[k];
        }
    }
    return polynomial(std::move(out));
}

enum class certificate_kind { companion_evaluation, root_isolation, trivial_all_coefficients };

inline std::string_view to_string(certificate_kind k)
{
    switch (k) {
        case certificate_kind::companion_evaluation:
            return "companion-evaluation";
        case certificate_kind::root_isolation:
            return "root-isolation";
        case certificate_kind::trivial_all_coefficients:
            return "trivial-all-coefficients";
    }
    return "";
}

inline certificate_kind certificate_kind_from_string(std::string_view s)
{
    if (s == "companion-evaluation") {
        return certificate_kind::companion_evaluation;
    }
    if (s == "root-isolation") {
        return certificate_kind::root_isolation;
    }
    if (s == "trivial-all-coefficients") {
        return certificate_kind::trivial_all_coefficients;
    }
    throw std::invalid_argument("unknown certificate kind '" + std::string(s) + "'");
}

/// Real interval with rational endpoints; an absent upper bound means +infinity.
struct interval {
    rational lower;
    bool lower_closed = false;
    std::optional<rational> upper;
    bool upper_closed = true;

    /// (0, u_max]
    static interval positive_up_to(const rational &u_max)
    {
        return {rational(0), false, u_max, true};
    }

    /// (0, +inf)
    static interval positive_reals()
    {
        return {rational(0), false, std::nullopt, false};
    }

    friend bool operator==(const interval &, const interval &) = default;

    [[nodiscard]] bool contains(const rational &x) const
    {
        const bool above = lower_closed ? x >= lower : x > lower;
        const bool below = !upper || (upper_closed ? x <= *upper : x < *upper);
        return above && below;
    }
};

/// Replayable proof that a polynomial is positive on an interval.
struct sign_certificate {
    certificate_kind kind;
    polynomial poly;
    interval range;
    std::optional<rational> witness_point;
    std::optional<rational> witness_value;

    friend bool operator==(const sign_certificate &, const sign_certificate &) = default;
};

enum class positivity_strategy { companion, roots };

namespace detail
{

inline bool all_coefficients_nonnegative(const polynomial &p)
{
    bool any_positive = false;
    for (const auto &c : p.coefficients()) {
        if (c < 0) {
            return false;
        }
        any_positive = any_positive || c > 0;
    }
    return any_positive;
}

// Strip u^k: positive on u > 0, so it does not affect the sign there.
inline polynomial strip_power_of_u(const polynomial &p)
{
    const std::size_t v = valuation(p);
    if (v == 0) {
        return p;
    }
    return polynomial(std::vector<rational>(p.coefficients().begin() + static_cast<long>(v), p.coefficients().end()));
}

} // namespace detail

/// Certifies p(u) > 0 for every u in (0, u_max].
///
/// companion: Q = companion(p, constant) is non-increasing on u > 0, so
/// Q(u_max) > 0 bounds p from below on the whole interval. If p has no
/// negative coefficient at all the trivial certificate is returned instead.
///
/// roots: exact Sturm count shows p has no root in (0, u_max) and p(u_max) > 0.
inline sign_certificate certify_positive(const polynomial &p, const rational &u_max, positivity_strategy strategy)
{
    if (!(u_max > 0)) {
        throw std::invalid_argument("certify_positive: u_max must be positive");
    }
    const interval range = interval::positive_up_to(u_max);
    if (detail::all_coefficients_nonnegative(p)) {
        return {certificate_kind::trivial_all_coefficients, p, range, std::nullopt, std::nullopt};
    }
    if (strategy == positivity_strategy::companion) {
        polynomial q;
        try {
            q = companion(p, anchor_term::constant);
        } catch (const anchor_not_positive &) {
            throw cannot_certify("certify_positive: constant term not positive");
        }
        const rational value = q(u_max);
        if (!(value > 0)) {
            throw cannot_certify("certify_positive: companion not positive at u_max");
        }
        return {certificate_kind::companion_evaluation, p, range, u_max, value};
    }
    const polynomial reduced = detail::strip_power_of_u(p);
    const rational value = reduced(u_max);
    if (!(value > 0) || reduced(rational(0)) == 0) {
        throw cannot_certify("certify_positive: nonpositive at u_max");
    }
    if (count_roots(reduced, rational(0), u_max) != 0) {
        throw cannot_certify("certify_positive: root inside interval");
    }
    return {certificate_kind::root_isolation, p, range, u_max, p(u_max)};
}

/// Certifies p(u) > 0 on u > 0 from coefficient signs alone.
inline sign_certificate certify_positive_on_positive_reals(const polynomial &p)
{
    if (!detail::all_coefficients_nonnegative(p)) {
        throw cannot_certify("certify_positive_on_positive_reals: negative coefficient present");
    }
    return {certificate_kind::trivial_all_coefficients, p, interval::positive_reals(), std::nullopt, std::nullopt};
}

/// Re-runs every check a certificate encodes, from its fields alone.
inline bool replay(const sign_certificate &cert)
{
    const interval &r = cert.range;
    if (r.lower < 0 || (r.lower == 0 && r.lower_closed)) {
        return false;
    }
    switch (cert.kind) {
        case certificate_kind::trivial_all_coefficients:
            return detail::all_coefficients_nonnegative(cert.poly);
        case certificate_kind::companion_evaluation: {
            if (!cert.witness_point || !cert.witness_value || !r.upper || !r.upper_closed) {
                return false;
            }
            if (*cert.witness_point != *r.upper || !r.contains(*cert.witness_point)) {
                return false;
            }
            polynomial q;
            try {
                q = companion(cert.poly, anchor_term::constant);
            } catch (const anchor_not_positive &) {
                return false;
            }
            return q(*cert.witness_point) == *cert.witness_value && *cert.witness_value > 0;
        }
        case certificate_kind::root_isolation: {
            if (!cert.witness_point || !cert.witness_value || !r.upper || !r.upper_closed) {
                return false;
            }
            if (*cert.witness_point != *r.upper || cert.poly(*cert.witness_point) != *cert.witness_value
                || !(*cert.witness_value > 0)) {
                return false;
            }
            const polynomial reduced = detail::strip_power_of_u(cert.poly);
            try {
                return count_roots(reduced, r.lower, *r.upper) == 0;
            } catch (const std::exception &) {
                return false;
            }
        }
    }
    return false;
}

inline json certificate_to_json(const sign_certificate &c)
{
    json j;
    j["kind"] = std::string(to_string(c.kind));
    j["poly"] = polynomial_to_json(c.poly);
    json range;
    range["lower"] = rational_to_json(c.range.lower);
    range["lower_closed"] = c.range.lower_closed;
    range["upper"] = c.range.upper ? rational_to_json(*c.range.upper) : json("inf");
    range["upper_closed"] = c.range.upper_closed;
    j["interval"] = range;
    j["witness_point"] = c.witness_point ? rational_to_json(*c.witness_point) : json(nullptr);
    j["witness_value"] = c.witness_value ? rational_to_json(*c.witness_value) : json(nullptr);
    return j;
}

inline sign_certificate certificate_from_json(const json &j)
{
    sign_certificate c;
    c.kind = certificate_kind_from_string(j.at("kind").get<std::string>());
    c.poly = polynomial_from_json(j.at("poly"));
    const json &r = j.at("interval");
    c.range.lower = rational_from_json(r.at("lower"));
    c.range.lower_closed = r.at("lower_closed").get<bool>();
    if (r.at("upper").is_string()) {
        c.range.upper = std::nullopt;
    } else {
        c.range.upper = rational_from_json(r.at("upper"));
    }
    c.range.upper_closed = r.at("upper_closed").get<bool>();
    if (!j.at("witness_point").is_null()) {
        c.witness_point = rational_from_json(j.at("witness_point"));
    }
    if (!j.at("witness_value").is_null()) {
        c.witness_value = rational_from_json(j.at("witness_value"));
    }
    return c;
}

} // namespace stirling

#endif
