#ifndef STIRLING_EXACT_JSON_HPP
#define STIRLING_EXACT_JSON_HPP

// JSON encodings of exact values. Rationals travel as {"num": "...", "den": "..."}
// strings so no precision is lost in transport.

#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>
#include <stirling/exact/rational_function.hpp>

#include <nlohmann/json.hpp>

#include <stdexcept>
#include <vector>

namespace stirling
{

using json = nlohmann::json;

inline json rational_to_json(const rational &q)
{
    return json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline rational rational_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw std::invalid_argument("json: expected {num, den} rational");
    }
    return make_rational(integer(j.at("num").get<std::string>(), 10), integer(j.at("den").get<std::string>(), 10));
}

/// Coefficient array, lowest degree first.
inline json polynomial_to_json(const polynomial &p)
{
    json arr = json::array();
    for (const auto &c : p.coefficients()) {
        arr.push_back(rational_to_json(c));
    }
    return arr;
}

inline polynomial polynomial_from_json(const json &j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("json: expected coefficient array");
    }
    std::vector<rational> c;
    c.reserve(j.size());
    for (const auto &e : j) {
        c.push_back(rational_from_json(e));
    }
    return polynomial(std::move(c));
}

inline json rational_function_to_json(const rational_function &r)
{
    return json{{"numerator", polynomial_to_json(r.numerator())}, {"denominator", polynomial_to_json(r.denominator())}};
}

inline rational_function rational_function_from_json(const json &j)
{
    return {polynomial_from_json(j.at("numerator")), polynomial_from_json(j.at("denominator"))};
}

} // namespace stirling

#endif
