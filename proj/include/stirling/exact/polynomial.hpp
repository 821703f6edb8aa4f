#ifndef STIRLING_EXACT_POLYNOMIAL_HPP
#define STIRLING_EXACT_POLYNOMIAL_HPP

#include <stirling/exact/rational.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stirling
{

/// Dense univariate polynomial over the rationals.
///
/// Coefficient i multiplies u^i. The coefficient vector never ends in a zero,
/// so the zero polynomial is the empty vector and degree() is -1 for it.
/// Every operation is exact.
class polynomial
{
public:
    polynomial() = default;

    polynomial(std::initializer_list<rational> coeffs) : m_coeffs(coeffs)
    {
        trim();
    }

    explicit polynomial(std::vector<rational> coeffs) : m_coeffs(std::move(coeffs))
    {
        trim();
    }

    /// Constant polynomial.
    static polynomial constant(const rational &c)
    {
        return polynomial(std::vector<rational>{c});
    }

    /// c * u^k.
    static polynomial monomial(const rational &c, std::size_t k)
    {
        std::vector<rational> v(k + 1);
        v[k] = c;
        return polynomial(std::move(v));
    }

    /// The indeterminate u.
    static polynomial variable()
    {
        return monomial(rational(1), 1);
    }

    [[nodiscard]] bool is_zero() const noexcept
    {
        return m_coeffs.empty();
    }

    [[nodiscard]] long degree() const noexcept
    {
        return static_cast<long>(m_coeffs.size()) - 1;
    }

    [[nodiscard]] const std::vector<rational> &coefficients() const noexcept
    {
        return m_coeffs;
    }

    /// Coefficient of u^k (zero past the degree).
    [[nodiscard]] rational coeff(std::size_t k) const
    {
        return k < m_coeffs.size() ? m_coeffs[k] : rational(0);
    }

    [[nodiscard]] const rational &leading() const
    {
        if (is_zero()) {
            throw std::domain_error("polynomial: leading coefficient of zero polynomial");
        }
        return m_coeffs.back();
    }

    /// Exact value at x (Horner).
    [[nodiscard]] rational operator()(const rational &x) const
    {
        rational acc(0);
        for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    }

    friend bool operator==(const polynomial &, const polynomial &) = default;

    polynomial &operator+=(const polynomial &other)
    {
        if (other.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(other.m_coeffs.size());
        }
        for (std::size_t i = 0; i < other.m_coeffs.size(); ++i) {
            m_coeffs[i] += other.m_coeffs[i];
        }
        trim();
        return *this;
    }

    polynomial &operator-=(const polynomial &other)
    {
        if (other.m_coeffs.size() > m_coeffs.size()) {
            m_coeffs.resize(other.m_coeffs.size());
        }
        for (std::size_t i = 0; i < other.m_coeffs.size(); ++i) {
            m_coeffs[i] -= other.m_coeffs[i];
        }
        trim();
        return *this;
    }

    polynomial &operator*=(const rational &c)
    {
        if (c == 0) {
            m_coeffs.clear();
            return *this;
        }
        for (auto &a : m_coeffs) {
            a *= c;
        }
        return *this;
    }

    friend polynomial operator+(polynomial a, const polynomial &b)
    {
        a += b;
        return a;
    }

    friend polynomial operator-(polynomial a, const polynomial &b)
    {
        a -= b;
        return a;
    }

    friend polynomial operator-(polynomial a)
    {
        for (auto &c : a.m_coeffs) {
            c = -c;
        }
        return a;
    }

    friend polynomial operator*(polynomial a, const rational &c)
    {
        a *= c;
        return a;
    }

    friend polynomial operator*(const rational &c, polynomial a)
    {
        a *= c;
        return a;
    }

    friend polynomial operator*(const polynomial &a, const polynomial &b)
    {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<rational> out(a.m_coeffs.size() + b.m_coeffs.size() - 1);
        for (std::size_t i = 0; i < a.m_coeffs.size(); ++i) {
            if (a.m_coeffs[i] == 0) {
                continue;
            }
            for (std::size_t j = 0; j < b.m_coeffs.size(); ++j) {
                out[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
            }
        }
        return polynomial(std::move(out));
    }

    polynomial &operator*=(const polynomial &other)
    {
        *this = *this * other;
        return *this;
    }

    /// Human-readable form, lowest degree first, e.g. "1 - 3/2*u + u^2".
    [[nodiscard]] std::string to_string(const std::string &var = "u") const
    {
        if (is_zero()) {
            return "0";
        }
        std::ostringstream os;
        bool first = true;
        for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
            const rational &c = m_coeffs[k];
            if (c == 0) {
                continue;
            }
            rational mag = abs(c);
            if (first) {
                if (c < 0) {
                    os << "-";
                }
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            if (k == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1) {
                os << mag.get_str() << "*";
            }
            os << var;
            if (k > 1) {
                os << "^" << k;
            }
        }
        return os.str();
    }

    friend std::ostream &operator<<(std::ostream &os, const polynomial &p)
    {
        return os << p.to_string();
    }

private:
    void trim()
    {
        while (!m_coeffs.empty() && m_coeffs.back() == 0) {
            m_coeffs.pop_back();
        }
    }

    std::vector<rational> m_coeffs;
};

/// Integer power by repeated squaring.
inline polynomial pow(polynomial base, unsigned exponent)
{
    polynomial result = polynomial::constant(1);
    while (exponent > 0) {
        if (exponent & 1U) {
            result *= base;
        }
        exponent >>= 1U;
        if (exponent > 0) {
            base *= base;
        }
    }
    return result;
}

/// outer(inner(u)), by Horner in the ring of polynomials.
inline polynomial compose(const polynomial &outer, const polynomial &inner)
{
    polynomial acc;
    const auto &c = outer.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * inner + polynomial::constant(*it);
    }
    return acc;
}

inline polynomial derivative(const polynomial &p)
{
    const auto &c = p.coefficients();
    if (c.size() <= 1) {
        return {};
    }
    std::vector<rational> out(c.size() - 1);
    for (std::size_t k = 1; k < c.size(); ++k) {
        out[k - 1] = c[k] * static_cast<unsigned long>(k);
    }
    return polynomial(std::move(out));
}

/// Euclidean division over Q: a = q*b + r with deg r < deg b.
inline std::pair<polynomial, polynomial> divrem(const polynomial &a, const polynomial &b)
{
    if (b.is_zero()) {
        throw std::domain_error("polynomial: division by zero polynomial");
    }
    std::vector<rational> rem = a.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) {
        return {polynomial{}, a};
    }
    std::vector<rational> quot(rem.size() - db);
    const rational &lb = b.leading();
    const auto &bc = b.coefficients();
    for (std::size_t k = rem.size(); k-- > db;) {
        rational f = rem[k] / lb;
        quot[k - db] = f;
        if (f == 0) {
            continue;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= f * bc[j];
        }
    }
    rem.resize(db);
    return {polynomial(std::move(quot)), polynomial(std::move(rem))};
}

/// Exact quotient; throws if b does not divide a.
inline polynomial divide_exact(const polynomial &a, const polynomial &b)
{
    auto [q, r] = divrem(a, b);
    if (!r.is_zero()) {
        throw std::domain_error("polynomial: inexact division");
    }
    return q;
}

/// u^deg * p(1/u) for deg >= degree(p): coefficient reversal.
inline polynomial reverse(const polynomial &p, std::size_t deg)
{
    if (p.degree() > static_cast<long>(deg)) {
        throw std::domain_error("polynomial: reversal degree below polynomial degree");
    }
    std::vector<rational> out(deg + 1);
    for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
        out[deg - k] = p.coefficients()[k];
    }
    return polynomial(std::move(out));
}

/// Lowest index with a nonzero coefficient (the u-adic valuation); 0 for the zero polynomial.
inline std::size_t valuation(const polynomial &p)
{
    const auto &c = p.coefficients();
    std::size_t k = 0;
    while (k < c.size() && c[k] == 0) {
        ++k;
    }
    return k == c.size() ? 0 : k;
}

/// Least common multiple of coefficient denominators.
inline integer common_denominator(const polynomial &p)
{
    integer d(1);
    for (const auto &c : p.coefficients()) {
        d = lcm(d, c.get_den());
    }
    return d;
}

} // namespace stirling

#endif
