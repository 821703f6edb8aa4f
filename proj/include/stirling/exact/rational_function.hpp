#ifndef STIRLING_EXACT_RATIONAL_FUNCTION_HPP
#define STIRLING_EXACT_RATIONAL_FUNCTION_HPP

#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>

#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace stirling
{

namespace detail
{

// Integer polynomials for the subresultant PRS. Same layout as polynomial.
using zpoly = std::vector<integer>;

inline void ztrim(zpoly &p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

inline long zdeg(const zpoly &p)
{
    return static_cast<long>(p.size()) - 1;
}

inline integer zcontent(const zpoly &p)
{
    integer g(0);
    for (const auto &c : p) {
        g = gcd(g, c);
    }
    return g;
}

inline zpoly zprimitive(zpoly p)
{
    const integer g = zcontent(p);
    if (g > 1) {
        for (auto &c : p) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
        }
    }
    return p;
}

// Scales p to an integer polynomial with the same roots.
inline zpoly to_zpoly(const polynomial &p)
{
    const integer d = common_denominator(p);
    zpoly out;
    out.reserve(p.coefficients().size());
    for (const auto &c : p.coefficients()) {
        out.push_back(c.get_num() * (d / c.get_den()));
    }
    return out;
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b, computed fraction-free.
inline zpoly zprem(zpoly a, const zpoly &b)
{
    const long db = zdeg(b);
    const integer &lb = b.back();
    long da = zdeg(a);
    if (da < db) {
        return a;
    }
    long e = da - db + 1;
    while (da >= db && !a.empty()) {
        const integer lead = a.back();
        for (auto &c : a) {
            c *= lb;
        }
        for (long j = 0; j <= db; ++j) {
            a[static_cast<std::size_t>(da - db + j)] -= lead * b[static_cast<std::size_t>(j)];
        }
        ztrim(a);
        --e;
        da = zdeg(a);
    }
    integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto &c : a) {
        c *= scale;
    }
    return a;
}

// Subresultant PRS gcd over Z (Collins / Brown), up to sign.
inline zpoly zgcd(zpoly a, zpoly b)
{
    ztrim(a);
    ztrim(b);
    if (zdeg(a) < zdeg(b)) {
        std::swap(a, b);
    }
    if (b.empty()) {
        return zprimitive(a);
    }
    const integer d = gcd(zcontent(a), zcontent(b));
    a = zprimitive(std::move(a));
    b = zprimitive(std::move(b));
    integer g(1);
    integer h(1);
    while (true) {
        const long delta = zdeg(a) - zdeg(b);
        zpoly r = zprem(a, b);
        if (r.empty()) {
            break;
        }
        if (zdeg(r) == 0) {
            b = zpoly{integer(1)};
            break;
        }
        a = std::move(b);
        integer hd;
        mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
        const integer divisor = g * hd;
        for (auto &c : r) {
            mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
        }
        b = std::move(r);
        g = a.back();
        if (delta > 0) {
            integer gd;
            mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
            integer hprev;
            mpz_pow_ui(hprev.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
            mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hprev.get_mpz_t());
        }
    }
    zpoly out = zprimitive(std::move(b));
    for (auto &c : out) {
        c *= d;
    }
    return out;
}

} // namespace detail

/// Monic gcd over Q; gcd(0, 0) = 0.
inline polynomial gcd(const polynomial &a, const polynomial &b)
{
    if (a.is_zero() && b.is_zero()) {
        return {};
    }
    const detail::zpoly z = detail::zgcd(detail::to_zpoly(a), detail::to_zpoly(b));
    std::vector<rational> c;
    c.reserve(z.size());
    for (const auto &v : z) {
        c.emplace_back(v);
    }
    polynomial g(std::move(c));
    return g * (rational(1) / g.leading());
}

/// Quotient of two polynomials in canonical form.
///
/// Canonical means numerator and denominator are coprime and the denominator
/// is monic, so two rational functions are equal iff their fields are equal.
class rational_function
{
public:
    rational_function() : m_den(polynomial::constant(1)) {}

    rational_function(polynomial num) : m_num(std::move(num)), m_den(polynomial::constant(1)) {}

    rational_function(polynomial num, polynomial den) : m_num(std::move(num)), m_den(std::move(den))
    {
        normalize();
    }

    [[nodiscard]] const polynomial &numerator() const noexcept
    {
        return m_num;
    }

    [[nodiscard]] const polynomial &denominator() const noexcept
    {
        return m_den;
    }

    [[nodiscard]] bool is_polynomial() const noexcept
    {
        return m_den.degree() == 0;
    }

    /// Exact value at x; throws if x is a pole.
    [[nodiscard]] rational operator()(const rational &x) const
    {
        const rational d = m_den(x);
        if (d == 0) {
            throw std::domain_error("rational_function: evaluation at a pole");
        }
        return m_num(x) / d;
    }

    friend bool operator==(const rational_function &, const rational_function &) = default;

    friend rational_function operator+(const rational_function &a, const rational_function &b)
    {
        return {a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den};
    }

    friend rational_function operator-(const rational_function &a, const rational_function &b)
    {
        return {a.m_num * b.m_den - b.m_num * a.m_den, a.m_den * b.m_den};
    }

    friend rational_function operator*(const rational_function &a, const rational_function &b)
    {
        return {a.m_num * b.m_num, a.m_den * b.m_den};
    }

    friend rational_function operator/(const rational_function &a, const rational_function &b)
    {
        if (b.m_num.is_zero()) {
            throw std::domain_error("rational_function: division by zero");
        }
        return {a.m_num * b.m_den, a.m_den * b.m_num};
    }

    friend std::ostream &operator<<(std::ostream &os, const rational_function &r)
    {
        return os << "(" << r.m_num << ") / (" << r.m_den << ")";
    }

private:
    void normalize()
    {
        if (m_den.is_zero()) {
            throw std::domain_error("rational_function: zero denominator");
        }
        if (m_num.is_zero()) {
            m_den = polynomial::constant(1);
            return;
        }
        const polynomial g = gcd(m_num, m_den);
        if (g.degree() > 0) {
            m_num = divide_exact(m_num, g);
            m_den = divide_exact(m_den, g);
        }
        const rational lc = m_den.leading();
        m_num *= rational(1) / lc;
        m_den *= rational(1) / lc;
    }

    polynomial m_num;
    polynomial m_den;
};

/// p(r) for a rational function r, by Horner.
inline rational_function compose(const polynomial &p, const rational_function &r)
{
    rational_function acc{polynomial{}};
    const auto &c = p.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * r + rational_function(polynomial::constant(*it));
    }
    return acc;
}

} // namespace stirling

#endif
