#ifndef STIRLING_BALL_CONSTANTS_HPP
#define STIRLING_BALL_CONSTANTS_HPP

#include <stirling/ball/ball.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace stirling
{

namespace detail
{

// Per-precision cache of constant enclosures. Fill is idempotent: two
// threads racing on the same precision compute identical balls.
class constant_cache
{
public:
    template <typename Compute>
    ball get(mpfr_prec_t prec, Compute &&compute)
    {
        {
            std::lock_guard lock(m_mutex);
            if (auto it = m_values.find(prec); it != m_values.end()) {
                return it->second;
            }
        }
        ball value = compute(prec);
        std::lock_guard lock(m_mutex);
        return m_values.emplace(prec, std::move(value)).first->second;
    }

private:
    std::mutex m_mutex;
    std::map<mpfr_prec_t, ball> m_values;
};

inline constant_cache &pi_cache()
{
    static constant_cache cache;
    return cache;
}

inline constant_cache &e_cache()
{
    static constant_cache cache;
    return cache;
}

inline void check_constant_precision(mpfr_prec_t bits)
{
    if (bits < 2) {
        throw std::invalid_argument("constant: precision must be at least 2 bits");
    }
}

} // namespace detail

/// Enclosure of pi with radius at most one ulp of the midpoint.
inline ball const_pi(mpfr_prec_t bits)
{
    detail::check_constant_precision(bits);
    return detail::pi_cache().get(bits, [](mpfr_prec_t p) {
        ball r(0L, p);
        const int t = mpfr_const_pi(r.m_mid.get(), MPFR_RNDN);
        r.m_rad = detail::rounding_error(r.m_mid, t);
        return r;
    });
}

/// Enclosure of e with radius at most one ulp of the midpoint.
inline ball const_e(mpfr_prec_t bits)
{
    detail::check_constant_precision(bits);
    return detail::e_cache().get(bits, [](mpfr_prec_t p) {
        ball r(0L, p);
        mpfr_t one;
        mpfr_init2(one, 2);
        mpfr_set_ui(one, 1, MPFR_RNDN);
        const int t = mpfr_exp(r.m_mid.get(), one, MPFR_RNDN);
        mpfr_clear(one);
        r.m_rad = detail::rounding_error(r.m_mid, t);
        return r;
    });
}

} // namespace stirling

#endif
