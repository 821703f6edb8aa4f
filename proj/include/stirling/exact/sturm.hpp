#ifndef STIRLING_EXACT_STURM_HPP
#define STIRLING_EXACT_STURM_HPP

#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace stirling
{

/// Raised when an endpoint handed to count_roots is itself a root.
struct endpoint_is_root : std::domain_error {
    using std::domain_error::domain_error;
};

/// Sturm chain p, p', -rem(p, p'), ...
///
/// Each remainder is rescaled by a positive constant to keep coefficient
/// growth in check; positive scaling leaves every sign (and thus every
/// variation count) unchanged.
inline std::vector<polynomial> sturm_sequence(const polynomial &p)
{
    std::vector<polynomial> seq;
    if (p.is_zero()) {
        return seq;
    }
    seq.push_back(p);
    polynomial d = derivative(p);
    if (d.is_zero()) {
        return seq;
    }
    seq.push_back(d);
    while (true) {
        const polynomial &a = seq[seq.size() - 2];
        const polynomial &b = seq.back();
        polynomial r = -divrem(a, b).second;
        if (r.is_zero()) {
            break;
        }
        r *= rational(1) / abs(r.leading());
        seq.push_back(std::move(r));
    }
    return seq;
}

/// Sign changes of the chain at x, zeros skipped.
inline std::size_t sign_variations(const std::vector<polynomial> &seq, const rational &x)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto &q : seq) {
        const int s = sgn(q(x));
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++changes;
        }
        last = s;
    }
    return changes;
}

/// Number of distinct real roots of p in the open interval (a, b).
///
/// Requires a < b and p(a), p(b) both nonzero; exact throughout.
inline std::size_t count_roots(const polynomial &p, const rational &a, const rational &b)
{
    if (!(a < b)) {
        throw std::invalid_argument("count_roots: need a < b");
    }
    if (p.is_zero()) {
        throw endpoint_is_root("count_roots: zero polynomial");
    }
    if (p(a) == 0 || p(b) == 0) {
        throw endpoint_is_root("count_roots: endpoint is a root");
    }
    const auto seq = sturm_sequence(p);
    const auto va = sign_variations(seq, a);
    const auto vb = sign_variations(seq, b);
    return va - vb;
}

/// Cauchy bound: every real root r of p satisfies |r| < 1 + max |c_k / c_n|.
inline rational cauchy_root_bound(const polynomial &p)
{
    if (p.degree() < 1) {
        return rational(1);
    }
    const rational lc = abs(p.leading());
    rational m(0);
    const auto &c = p.coefficients();
    for (std::size_t k = 0; k + 1 < c.size(); ++k) {
        const rational q = abs(c[k]) / lc;
        if (q > m) {
            m = q;
        }
    }
    return m + 1;
}

} // namespace stirling

#endif
