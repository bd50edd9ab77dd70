#include <cmath>

#include <gtest/gtest.h>

#include "mtp/combinatorics.hpp"
#include "mtp/polynomial.hpp"
#include "random_instances.hpp"

namespace {

using mtp::Polynomial;
using mtp::Rational;
using P = Polynomial<Rational>;

template <class A, class B>
concept Addable = requires(A a, B b) { a + b; };
template <class A, class B>
concept Multipliable = requires(A a, B b) { a * b; };

static_assert(Addable<P, P>);
static_assert(!Addable<Polynomial<Rational>, Polynomial<double>>, "mixed field modes must not combine");
static_assert(!Multipliable<Polynomial<double>, Polynomial<Rational>>, "mixed field modes must not combine");

TEST(Polynomial, ZeroHasNoDegree)
{
    EXPECT_FALSE(P().degree().has_value());
    EXPECT_TRUE(P({0, 0, 0}).is_zero());
    EXPECT_EQ(P({1, 2, 0, 0}).degree(), 1u);
    EXPECT_EQ(P({1, 2, 0, 0}).coefficients().size(), 2u);
}

TEST(Polynomial, Eval)
{
    EXPECT_EQ(P({1, 2, 3})(Rational(0)), 1);
    EXPECT_EQ(P({0, 1})(Rational(7)), 7);
    EXPECT_EQ(mtp::eval(P({1, -1, 1}), Rational(2)), 3);
    EXPECT_EQ(P()(Rational(5)), 0);
}

TEST(Polynomial, Derivative)
{
    EXPECT_TRUE(derivative(P({5})).is_zero());
    EXPECT_EQ(derivative(P({0, 0, 1})), P({0, 2}));
    EXPECT_EQ(derivative(P({1, 2, 3, 4})), P({2, 6, 12}));
}

TEST(Polynomial, NthDerivativeAt)
{
    EXPECT_EQ(nth_derivative_at(P({1, 2, 3}), 2, Rational(0)), 6);
    EXPECT_EQ(nth_derivative_at(P({0, 1}), 1, Rational(-13, 7)), 1);
    EXPECT_EQ(nth_derivative_at(P({1, 0, 0, 1}), 2, Rational(1)), 6);
    EXPECT_EQ(nth_derivative_at(P({1, 0, 0, 1}), 9, Rational(1)), 0);
}

TEST(Polynomial, RingOperations)
{
    EXPECT_EQ(P({1, 1}) * P({1, -1}), P({1, 0, -1}));
    EXPECT_EQ(P({1}) + P({0, 1}), P({1, 1}));
    EXPECT_EQ(scale(P({1, 2}) * P({3}), Rational(2)), P({6, 12}));
    EXPECT_TRUE((P({1, 2}) - P({1, 2})).is_zero());
    EXPECT_TRUE((P({1, 2}) * P()).is_zero());
}

TEST(Polynomial, Pow)
{
    EXPECT_EQ(pow(P({0, 1}), 3), P({0, 0, 0, 1}));
    EXPECT_EQ(pow(P({3, -2, 5}), 0), P({1}));
    EXPECT_EQ(pow(P({1, 1}), 2), P({1, 2, 1}));
    // (1+x)^n has binomial coefficients.
    const P p = pow(P({1, 1}), 9);
    for (unsigned r = 0; r <= 9; ++r)
        EXPECT_EQ(p[r], Rational(mtp::combinatorics::binomial(9, r)));
}

TEST(Polynomial, TrimmingIsIdempotent)
{
    const Polynomial<double> p({1.0, 2.0, 1e-14, -1e-15});
    EXPECT_EQ(p.degree(), 3u); // default threshold keeps everything nonzero
    const auto once = p.trimmed(1e-12);
    EXPECT_EQ(once.degree(), 1u);
    EXPECT_EQ(once.trimmed(1e-12), once);
    EXPECT_EQ(p.trimmed(0.0), p);

    const P exact({1, 2, 3});
    EXPECT_EQ(exact.trimmed(Rational(0)), exact);
    EXPECT_THROW(exact.trimmed(Rational(1, 10)), std::invalid_argument);
}

TEST(PolynomialProperty, EvalIsMultiplicative)
{
    mtp::testing::InstanceGenerator gen(11);
    for (int trial = 0; trial < 200; ++trial) {
        const P p = gen.rational_polynomial(gen.integer(0, 6));
        const P q = gen.rational_polynomial(gen.integer(0, 6));
        const Rational x = gen.rational(50, 13);
        ASSERT_EQ((p * q)(x), p(x) * q(x));
        ASSERT_EQ((p + q)(x), p(x) + q(x));
    }
}

TEST(PolynomialProperty, ChainRuleForPowers)
{
    mtp::testing::InstanceGenerator gen(12);
    for (int trial = 0; trial < 60; ++trial) {
        const P p = gen.rational_polynomial(gen.integer(1, 4));
        const unsigned e = static_cast<unsigned>(gen.integer(1, 6));
        ASSERT_EQ(derivative(pow(p, e)), scale(pow(p, e - 1) * derivative(p), Rational(e)));
    }
}

TEST(PolynomialProperty, NthDerivativeMatchesCoefficientFormula)
{
    // p^{(n)}(x) = sum_{d>=n} d!/(d-n)! c_d x^{d-n}
    mtp::testing::InstanceGenerator gen(13);
    for (int trial = 0; trial < 100; ++trial) {
        const P p = gen.rational_polynomial(gen.integer(0, 8));
        const unsigned n = static_cast<unsigned>(gen.integer(0, 9));
        const Rational x = gen.rational(30, 7);
        Rational expected = 0;
        for (std::size_t d = n; d < p.coefficients().size(); ++d) {
            Rational power = 1;
            for (std::size_t t = n; t < d; ++t)
                power *= x;
            expected += Rational(mtp::combinatorics::factorial(static_cast<unsigned>(d))
                                 / mtp::combinatorics::factorial(static_cast<unsigned>(d - n)))
                        * p[d] * power;
        }
        ASSERT_EQ(nth_derivative_at(p, n, x), expected);
    }
}

TEST(PolynomialProperty, NthDerivativeMatchesCentralDifferences)
{
    mtp::testing::InstanceGenerator gen(14);
    const double h = 1e-5;
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> c;
        for (int i = 0; i <= 6; ++i)
            c.push_back(gen.uniform(-2, 2));
        const Polynomial<double> p(c);
        const double x = gen.uniform(-1.5, 1.5);
        for (unsigned n = 1; n <= 4; ++n) {
            const double fd = (nth_derivative_at(p, n - 1, x + h) - nth_derivative_at(p, n - 1, x - h)) / (2 * h);
            const double exact = nth_derivative_at(p, n, x);
            if (std::fabs(exact) < 1e-3)
                continue; // relative error is meaningless near a root
            EXPECT_NEAR(fd / exact, 1.0, 1e-5) << "n=" << n << " x=" << x;
        }
    }
}

} // namespace
