#include "support/generators.hpp"

#include <stirling/series/taylor_bounds.hpp>

#include <gtest/gtest.h>

using namespace stirling;

namespace
{

rational q(long a, long b = 1)
{
    return make_rational(a, b);
}

const bound_tag all_tags[] = {bound_tag::eq2, bound_tag::eq3, bound_tag::eq4, bound_tag::eq5};

} // namespace

TEST(TaylorBound, Coefficients)
{
    const polynomial expected{q(0), q(1), q(-1, 2), q(1, 3), q(-1, 4), q(1, 5)};
    EXPECT_EQ(bound(bound_tag::eq2).poly, expected);
    const auto eq4 = bound(bound_tag::eq4);
    EXPECT_EQ(eq4.poly.degree(), 8);
    EXPECT_EQ(eq4.poly.leading(), q(-1, 8));
    EXPECT_EQ(bound(bound_tag::eq3).poly.degree(), 7);
    EXPECT_EQ(bound(bound_tag::eq5).poly(q(0)), 1);
    EXPECT_EQ(bound(bound_tag::eq5).poly.coeff(3), q(1, 6));
    EXPECT_EQ(bound(bound_tag::eq5).poly.coeff(4), q(1, 24));
}

TEST(TaylorBound, Metadata)
{
    EXPECT_EQ(to_string(bound_tag::eq3), "Eq3");
    EXPECT_EQ(bound(bound_tag::eq2).direction, bound_direction::upper);
    EXPECT_EQ(bound(bound_tag::eq3).direction, bound_direction::upper);
    EXPECT_EQ(bound(bound_tag::eq4).direction, bound_direction::lower);
    EXPECT_EQ(bound(bound_tag::eq5).direction, bound_direction::lower);
    EXPECT_EQ(bound(bound_tag::eq5).function, bounded_function::exp);
    EXPECT_FALSE(bound(bound_tag::eq2).valid_on.contains(q(-1)));
    EXPECT_TRUE(bound(bound_tag::eq2).valid_on.contains(q(1)));
    EXPECT_TRUE(bound(bound_tag::eq5).valid_on.contains(q(1000000)));
    EXPECT_FALSE(bound(bound_tag::eq5).valid_on.contains(q(-1, 1000)));
}

TEST(TaylorBound, CheckExamples)
{
    EXPECT_EQ(bound(bound_tag::eq2).poly(q(1)), q(47, 60));
    EXPECT_EQ(check_bound_at(bound_tag::eq2, q(1), 64), outcome::holds);
    EXPECT_EQ(check_bound_at(bound_tag::eq4, q(1), 64), outcome::holds);
    EXPECT_EQ(bound(bound_tag::eq4).poly(q(1)), q(533, 840));
    EXPECT_EQ(check_bound_at(bound_tag::eq5, q(0), 32), outcome::holds);
}

TEST(TaylorBound, DomainEnforced)
{
    EXPECT_THROW(check_bound_at(bound_tag::eq2, q(2), 64), std::domain_error);
    EXPECT_THROW(check_bound_at(bound_tag::eq2, q(-1), 64), std::domain_error);
    EXPECT_THROW(check_bound_at(bound_tag::eq4, q(-1, 2), 64), std::domain_error);
    EXPECT_THROW(check_bound_at(bound_tag::eq5, q(-1), 64), std::domain_error);
}

TEST(TaylorBound, EvenTruncationFailsForNegativeArguments)
{
    // The degree-8 lower truncation overshoots ln(1+x) on (-1, 0).
    taylor_bound widened = bound(bound_tag::eq4);
    widened.valid_on = interval{q(-1), false, q(1), true};
    EXPECT_EQ(check_bound_at(widened, q(-1, 2), 128), outcome::fails);
    EXPECT_EQ(check_bound_at(widened, q(-1, 10), 128), outcome::fails);
}

TEST(TaylorBound, MisprintedExponentialIsDetected)
{
    // x^3/3 in place of x^3/3! overshoots e^x for small x > 0.
    taylor_bound misprint = bound(bound_tag::eq5);
    misprint.poly = polynomial{q(1), q(1), q(1, 2), q(1, 3), q(1, 24)};
    EXPECT_EQ(check_bound_at(misprint, q(1, 10), 128), outcome::fails);
}

TEST(TaylorBound, AlternatingStructure)
{
    for (bound_tag t : {bound_tag::eq2, bound_tag::eq3, bound_tag::eq4}) {
        const auto b = bound(t);
        EXPECT_EQ(b.poly.coeff(0), 0);
        for (long k = 1; k <= b.poly.degree(); ++k) {
            EXPECT_EQ(b.poly.coeff(static_cast<std::size_t>(k)), make_rational(k % 2 == 1 ? 1 : -1, k));
        }
    }
    // Coefficientwise at most the exponential series.
    const auto e = bound(bound_tag::eq5);
    integer fact = 1;
    for (long k = 0; k <= e.poly.degree(); ++k) {
        if (k > 0) {
            fact *= k;
        }
        EXPECT_LE(e.poly.coeff(static_cast<std::size_t>(k)), make_rational(integer(1), fact));
    }
}

TEST(TaylorBound, SamplingProperty)
{
    // 10^3 random points per bound over its validity domain, both signs for the log bounds.
    testkit::generator g(31);
    for (bound_tag t : all_tags) {
        const auto b = bound(t);
        int checked = 0;
        for (int i = 0; i < 1000; ++i) {
            rational x;
            switch (t) {
                case bound_tag::eq2:
                case bound_tag::eq3:
                    x = i % 2 == 0 ? g.rational_in(q(-999, 1000), q(0), 100000) : g.rational_in(q(0), q(1), 100000);
                    break;
                case bound_tag::eq4:
                    x = g.rational_in(q(0), q(1), 100000);
                    break;
                case bound_tag::eq5:
                    x = g.rational_in(q(0), q(40), 100000);
                    break;
            }
            ASSERT_NE(check_bound_at(b, x, 128), outcome::fails) << to_string(t) << " at " << x;
            ++checked;
        }
        EXPECT_EQ(checked, 1000);
    }
}
