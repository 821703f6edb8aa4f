#ifndef STIRLING_BALL_BALL_HPP
#define STIRLING_BALL_BALL_HPP

#include <stirling/exact/rational.hpp>

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace stirling
{

namespace detail
{

// Owning mpfr_t with value semantics.
class mpfr_float
{
public:
    explicit mpfr_float(mpfr_prec_t prec)
    {
        mpfr_init2(m_value, prec);
        mpfr_set_zero(m_value, 1);
    }

    mpfr_float(const mpfr_float &other)
    {
        mpfr_init2(m_value, mpfr_get_prec(other.m_value));
        mpfr_set(m_value, other.m_value, MPFR_RNDN);
    }

    mpfr_float(mpfr_float &&other) noexcept
    {
        mpfr_init2(m_value, MPFR_PREC_MIN);
        mpfr_swap(m_value, other.m_value);
    }

    mpfr_float &operator=(const mpfr_float &other)
    {
        if (this != &other) {
            mpfr_set_prec(m_value, mpfr_get_prec(other.m_value));
            mpfr_set(m_value, other.m_value, MPFR_RNDN);
        }
        return *this;
    }

    mpfr_float &operator=(mpfr_float &&other) noexcept
    {
        mpfr_swap(m_value, other.m_value);
        return *this;
    }

    ~mpfr_float()
    {
        mpfr_clear(m_value);
    }

    mpfr_ptr get() noexcept
    {
        return m_value;
    }

    [[nodiscard]] mpfr_srcptr get() const noexcept
    {
        return m_value;
    }

    [[nodiscard]] rational to_rational() const
    {
        rational q;
        mpfr_get_q(q.get_mpq_t(), m_value);
        return q;
    }

private:
    mpfr_t m_value;
};

// Radii live at a fixed small precision and are only ever rounded upward.
inline constexpr mpfr_prec_t radius_prec = 64;

inline mpfr_float zero_radius()
{
    return mpfr_float(radius_prec);
}

// Upper bound on the error of a round-to-nearest result: one ulp, or zero if exact.
inline mpfr_float rounding_error(const mpfr_float &value, int ternary)
{
    mpfr_float err(radius_prec);
    if (ternary == 0) {
        return err;
    }
    if (mpfr_zero_p(value.get()) || !mpfr_number_p(value.get())) {
        throw std::overflow_error("ball: rounding error at zero or non-finite midpoint");
    }
    mpfr_set_ui_2exp(err.get(), 1, mpfr_get_exp(value.get()) - mpfr_get_prec(value.get()), MPFR_RNDU);
    return err;
}

inline mpfr_float abs_up(mpfr_srcptr x)
{
    mpfr_float r(radius_prec);
    mpfr_abs(r.get(), x, MPFR_RNDU);
    return r;
}

inline mpfr_float abs_down(mpfr_srcptr x)
{
    mpfr_float r(radius_prec);
    mpfr_abs(r.get(), x, MPFR_RNDD);
    return r;
}

inline mpfr_float add_up(const mpfr_float &a, const mpfr_float &b)
{
    mpfr_float r(radius_prec);
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

inline mpfr_float mul_up(const mpfr_float &a, const mpfr_float &b)
{
    mpfr_float r(radius_prec);
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

inline mpfr_float div_up(const mpfr_float &a, const mpfr_float &b)
{
    mpfr_float r(radius_prec);
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDU);
    return r;
}

} // namespace detail

/// Midpoint-radius enclosure [mid - rad, mid + rad] of a real number.
///
/// The midpoint is an MPFR float at the working precision; the radius is a
/// 64-bit MPFR float rounded upward. Every operation returns a ball that
/// contains the exact image of its input sets: the midpoint is computed with
/// round-to-nearest and its rounding error (at most one ulp) is added to the
/// propagated radius.
class ball
{
public:
    ball() : ball(0L, 64) {}

    ball(long value, mpfr_prec_t prec) : m_mid(prec), m_rad(detail::radius_prec)
    {
        const int t = mpfr_set_si(m_mid.get(), value, MPFR_RNDN);
        m_rad = detail::rounding_error(m_mid, t);
    }

    static ball from_integer(const integer &value, mpfr_prec_t prec)
    {
        ball b(0L, prec);
        const int t = mpfr_set_z(b.m_mid.get(), value.get_mpz_t(), MPFR_RNDN);
        b.m_rad = detail::rounding_error(b.m_mid, t);
        return b;
    }

    /// Exact when q is representable at prec, otherwise one outward rounding.
    static ball from_rational(const rational &value, mpfr_prec_t prec)
    {
        ball b(0L, prec);
        const int t = mpfr_set_q(b.m_mid.get(), value.get_mpq_t(), MPFR_RNDN);
        b.m_rad = detail::rounding_error(b.m_mid, t);
        return b;
    }

    /// Ball with given midpoint and radius (the radius is rounded up).
    static ball from_mid_rad(const rational &mid, const rational &rad, mpfr_prec_t prec)
    {
        if (rad < 0) {
            throw std::invalid_argument("ball: negative radius");
        }
        ball b = from_rational(mid, prec);
        detail::mpfr_float r(detail::radius_prec);
        mpfr_set_q(r.get(), rad.get_mpq_t(), MPFR_RNDU);
        b.m_rad = detail::add_up(b.m_rad, r);
        return b;
    }

    [[nodiscard]] mpfr_prec_t precision() const noexcept
    {
        return mpfr_get_prec(m_mid.get());
    }

    [[nodiscard]] mpfr_srcptr midpoint() const noexcept
    {
        return m_mid.get();
    }

    [[nodiscard]] mpfr_srcptr radius() const noexcept
    {
        return m_rad.get();
    }

    [[nodiscard]] rational mid_rational() const
    {
        return m_mid.to_rational();
    }

    [[nodiscard]] rational rad_rational() const
    {
        return m_rad.to_rational();
    }

    /// Exact lower endpoint.
    [[nodiscard]] rational lower() const
    {
        return mid_rational() - rad_rational();
    }

    /// Exact upper endpoint.
    [[nodiscard]] rational upper() const
    {
        return mid_rational() + rad_rational();
    }

    [[nodiscard]] bool is_exact() const noexcept
    {
        return mpfr_zero_p(m_rad.get()) != 0;
    }

    [[nodiscard]] bool contains(const rational &x) const
    {
        return lower() <= x && x <= upper();
    }

    [[nodiscard]] bool contains(const ball &other) const
    {
        return lower() <= other.lower() && other.upper() <= upper();
    }

    [[nodiscard]] bool overlaps(const ball &other) const
    {
        return !(upper() < other.lower() || other.upper() < lower());
    }

    /// True when the whole enclosure is strictly positive.
    [[nodiscard]] bool is_positive() const
    {
        return mpfr_sgn(m_mid.get()) > 0 && mpfr_cmp(m_mid.get(), m_rad.get()) > 0;
    }

    /// True when 0 is outside the enclosure.
    [[nodiscard]] bool is_nonzero() const
    {
        return mpfr_cmpabs(m_mid.get(), m_rad.get()) > 0;
    }

    friend ball operator-(const ball &a)
    {
        ball r = a;
        mpfr_neg(r.m_mid.get(), a.m_mid.get(), MPFR_RNDN);
        return r;
    }

    friend ball operator+(const ball &a, const ball &b)
    {
        ball r(0L, std::max(a.precision(), b.precision()));
        const int t = mpfr_add(r.m_mid.get(), a.m_mid.get(), b.m_mid.get(), MPFR_RNDN);
        r.m_rad = detail::add_up(detail::add_up(a.m_rad, b.m_rad), detail::rounding_error(r.m_mid, t));
        return r;
    }

    friend ball operator-(const ball &a, const ball &b)
    {
        ball r(0L, std::max(a.precision(), b.precision()));
        const int t = mpfr_sub(r.m_mid.get(), a.m_mid.get(), b.m_mid.get(), MPFR_RNDN);
        r.m_rad = detail::add_up(detail::add_up(a.m_rad, b.m_rad), detail::rounding_error(r.m_mid, t));
        return r;
    }

    friend ball operator*(const ball &a, const ball &b)
    {
        ball r(0L, std::max(a.precision(), b.precision()));
        const int t = mpfr_mul(r.m_mid.get(), a.m_mid.get(), b.m_mid.get(), MPFR_RNDN);
        // |ma| rb + |mb| ra + ra rb
        auto prop = detail::add_up(detail::mul_up(detail::abs_up(a.m_mid.get()), b.m_rad),
                                   detail::mul_up(detail::abs_up(b.m_mid.get()), a.m_rad));
        prop = detail::add_up(prop, detail::mul_up(a.m_rad, b.m_rad));
        r.m_rad = detail::add_up(prop, detail::rounding_error(r.m_mid, t));
        return r;
    }

    friend ball operator/(const ball &a, const ball &b)
    {
        if (!b.is_nonzero()) {
            throw std::domain_error("ball: division by a ball containing zero");
        }
        ball r(0L, std::max(a.precision(), b.precision()));
        const int t = mpfr_div(r.m_mid.get(), a.m_mid.get(), b.m_mid.get(), MPFR_RNDN);
        // (ra + |ma/mb| rb) / (|mb| - rb)
        detail::mpfr_float den(detail::radius_prec);
        mpfr_sub(den.get(), detail::abs_down(b.m_mid.get()).get(), b.m_rad.get(), MPFR_RNDD);
        if (mpfr_sgn(den.get()) <= 0) {
            throw std::domain_error("ball: division by a ball too close to zero");
        }
        detail::mpfr_float ratio(detail::radius_prec);
        detail::mpfr_float bden(detail::radius_prec);
        mpfr_abs(bden.get(), b.m_mid.get(), MPFR_RNDD);
        mpfr_div(ratio.get(), detail::abs_up(a.m_mid.get()).get(), bden.get(), MPFR_RNDU);
        auto num = detail::add_up(a.m_rad, detail::mul_up(ratio, b.m_rad));
        r.m_rad = detail::add_up(detail::div_up(num, den), detail::rounding_error(r.m_mid, t));
        return r;
    }

    ball &operator+=(const ball &o)
    {
        return *this = *this + o;
    }

    ball &operator-=(const ball &o)
    {
        return *this = *this - o;
    }

    ball &operator*=(const ball &o)
    {
        return *this = *this * o;
    }

    ball &operator/=(const ball &o)
    {
        return *this = *this / o;
    }

private:
    friend ball exp(const ball &);
    friend ball log(const ball &);
    friend ball sqrt(const ball &);
    friend ball const_pi(mpfr_prec_t);
    friend ball const_e(mpfr_prec_t);

    detail::mpfr_float m_mid;
    detail::mpfr_float m_rad;
};

/// e^x; |e^y - e^m| <= e^m (e^r - 1) for |y - m| <= r.
inline ball exp(const ball &x)
{
    ball r(0L, x.precision());
    const int t = mpfr_exp(r.m_mid.get(), x.m_mid.get(), MPFR_RNDN);
    detail::mpfr_float prop(detail::radius_prec);
    if (!x.is_exact()) {
        detail::mpfr_float em(detail::radius_prec);
        mpfr_exp(em.get(), x.m_mid.get(), MPFR_RNDU);
        detail::mpfr_float er(detail::radius_prec);
        mpfr_expm1(er.get(), x.m_rad.get(), MPFR_RNDU);
        prop = detail::mul_up(em, er);
    }
    r.m_rad = detail::add_up(prop, detail::rounding_error(r.m_mid, t));
    return r;
}

/// Natural log; requires the enclosure to be strictly positive.
/// |ln y - ln m| <= r / (m - r).
inline ball log(const ball &x)
{
    if (!x.is_positive()) {
        throw std::domain_error("ball: log of a ball not strictly positive");
    }
    ball r(0L, x.precision());
    const int t = mpfr_log(r.m_mid.get(), x.m_mid.get(), MPFR_RNDN);
    detail::mpfr_float prop(detail::radius_prec);
    if (!x.is_exact()) {
        detail::mpfr_float gap(detail::radius_prec);
        mpfr_sub(gap.get(), x.m_mid.get(), x.m_rad.get(), MPFR_RNDD);
        prop = detail::div_up(x.m_rad, gap);
    }
    r.m_rad = detail::add_up(prop, detail::rounding_error(r.m_mid, t));
    return r;
}

/// Square root; requires the enclosure to be strictly positive.
/// |sqrt y - sqrt m| <= r / sqrt m.
inline ball sqrt(const ball &x)
{
    if (!x.is_positive()) {
        throw std::domain_error("ball: sqrt of a ball not strictly positive");
    }
    ball r(0L, x.precision());
    const int t = mpfr_sqrt(r.m_mid.get(), x.m_mid.get(), MPFR_RNDN);
    detail::mpfr_float prop(detail::radius_prec);
    if (!x.is_exact()) {
        detail::mpfr_float root(detail::radius_prec);
        mpfr_sqrt(root.get(), x.m_mid.get(), MPFR_RNDD);
        prop = detail::div_up(x.m_rad, root);
    }
    r.m_rad = detail::add_up(prop, detail::rounding_error(r.m_mid, t));
    return r;
}

/// x^k by repeated squaring; negative k goes through 1 / x^|k|.
inline ball pow(const ball &x, long k)
{
    if (k < 0) {
        return ball(1L, x.precision()) / pow(x, -k);
    }
    ball result(1L, x.precision());
    ball base = x;
    auto e = static_cast<unsigned long>(k);
    while (e > 0) {
        if (e & 1UL) {
            result *= base;
        }
        e >>= 1UL;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

/// n! computed exactly, then rounded once to prec bits.
inline ball factorial(unsigned long n, mpfr_prec_t prec)
{
    integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return ball::from_integer(f, prec);
}

enum class decision { yes, no, undecided };

/// yes iff sup(a) < inf(b); no iff inf(a) > sup(b); undecided otherwise.
inline decision certified_less(const ball &a, const ball &b)
{
    if (a.upper() < b.lower()) {
        return decision::yes;
    }
    if (a.lower() > b.upper()) {
        return decision::no;
    }
    return decision::undecided;
}

/// Same contract against an exact rational.
inline decision certified_less(const ball &a, const rational &b)
{
    if (a.upper() < b) {
        return decision::yes;
    }
    if (a.lower() > b) {
        return decision::no;
    }
    return decision::undecided;
}

inline decision certified_less(const rational &a, const ball &b)
{
    if (a < b.lower()) {
        return decision::yes;
    }
    if (a > b.upper()) {
        return decision::no;
    }
    return decision::undecided;
}

} // namespace stirling

#endif
