#pragma once

// Seeded generators for property tests.

#include <stirling/exact/polynomial.hpp>
#include <stirling/exact/rational.hpp>

#include <random>

namespace stirling::testkit
{

class generator
{
public:
    explicit generator(std::uint64_t seed = 0x5eed) : m_rng(seed) {}

    long integer_in(long lo, long hi)
    {
        return std::uniform_int_distribution<long>(lo, hi)(m_rng);
    }

    rational small_rational(long bound = 50)
    {
        return make_rational(integer_in(-bound, bound), integer_in(1, bound));
    }

    /// Uniform-ish rational in [lo, hi] with denominator up to `den`.
    rational rational_in(const rational &lo, const rational &hi, long den = 1000)
    {
        const long k = integer_in(0, den);
        return lo + (hi - lo) * make_rational(k, den);
    }

    polynomial poly(int max_degree = 6, long bound = 20)
    {
        const int deg = static_cast<int>(integer_in(-1, max_degree));
        std::vector<rational> c;
        for (int i = 0; i <= deg; ++i) {
            c.push_back(small_rational(bound));
        }
        return polynomial(std::move(c));
    }

    std::mt19937_64 &engine()
    {
        return m_rng;
    }

private:
    std::mt19937_64 m_rng;
};

} // namespace stirling::testkit
