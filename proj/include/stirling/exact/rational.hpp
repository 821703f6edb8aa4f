#ifndef STIRLING_EXACT_RATIONAL_HPP
#define STIRLING_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace stirling
{

/// Exact rational number, always in canonical form (positive denominator, reduced).
///
/// gmpxx keeps results of arithmetic canonical; the only ways to break the
/// invariant are the two-argument constructor and string parsing, which is why
/// construction goes through make_rational / parse_rational.
using rational = mpq_class;
using integer = mpz_class;

inline rational make_rational(const integer &num, const integer &den)
{
    if (den == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    rational r(num, den);
    r.canonicalize();
    return r;
}

inline rational make_rational(long num, long den = 1)
{
    return make_rational(integer(num), integer(den));
}

/// Parses "p", "-p" or "p/q" (base 10).
inline rational parse_rational(std::string_view text)
{
    rational r;
    if (r.set_str(std::string(text), 10) != 0) {
        throw std::invalid_argument("rational: cannot parse '" + std::string(text) + "'");
    }
    if (r.get_den() == 0) {
        throw std::domain_error("rational: zero denominator");
    }
    r.canonicalize();
    return r;
}

inline std::string to_string(const rational &q)
{
    return q.get_str(10);
}

inline std::string to_string(const integer &z)
{
    return z.get_str(10);
}

inline bool is_integer(const rational &q)
{
    return q.get_den() == 1;
}

/// Exact q^k for k >= 0.
inline rational pow(const rational &q, unsigned long k)
{
    integer num, den;
    mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), k);
    return make_rational(num, den);
}

inline integer lcm(const integer &a, const integer &b)
{
    integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline integer gcd(const integer &a, const integer &b)
{
    integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Decimal approximation in scientific notation, for human-readable report fields only.
inline std::string to_decimal(const rational &q, int digits = 6)
{
    mpf_class f(q, 64 + static_cast<mp_bitcnt_t>(digits) * 4);
    mp_exp_t exp = 0;
    std::string s = f.get_str(exp, 10, static_cast<std::size_t>(digits));
    if (s.empty()) {
        return "0";
    }
    std::string sign;
    if (s.front() == '-') {
        sign = "-";
        s.erase(0, 1);
    }
    const auto exponent = static_cast<long>(exp) - 1;
    std::string mant = s.substr(0, 1);
    if (s.size() > 1) {
        mant += "." + s.substr(1);
    }
    return sign + mant + "e" + std::to_string(exponent);
}

} // namespace stirling

#endif
