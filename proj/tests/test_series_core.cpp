#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <hsomos/power_series.hpp>
#include <hsomos/rational.hpp>

#include "test_support.hpp"

using namespace hsomos;
using hsomos::testing::ints;

namespace
{

PowerSeries series(std::initializer_list<long> c)
{
    return PowerSeries(ints(c));
}

} // namespace

TEST(Rational, NormalizesToLowestTerms)
{
    const Rational q(Integer(6), Integer(-4));
    EXPECT_EQ(q.numerator(), -3);
    EXPECT_EQ(q.denominator(), 2);
    EXPECT_EQ(q.str(), "-3/2");
    EXPECT_EQ(Rational(0).fraction_str(), "0/1");
    EXPECT_EQ(Rational(Integer(0), Integer(-7)).fraction_str(), "0/1");
}

TEST(Rational, ParseAndErrors)
{
    EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
    EXPECT_EQ(Rational::parse("+7"), Rational(7));
    EXPECT_THROW(Rational::parse("1/0"), zero_divisor);
    EXPECT_THROW(Rational::parse("1/-2"), error);
    EXPECT_THROW(Rational::parse("abc"), error);
    EXPECT_THROW(Rational::parse(""), error);
    EXPECT_THROW(Rational(1) / Rational(0), zero_divisor);
}

TEST(Rational, BigValuesStayExact)
{
    Rational q(1);
    for (int i = 0; i < 200; ++i) {
        q *= Rational(3, 2);
    }
    for (int i = 0; i < 200; ++i) {
        q /= Rational(3, 2);
    }
    EXPECT_EQ(q, Rational(1));
}

TEST(PowerSeries, AddCancellationAndIdentity)
{
    const auto s = series({1, 1}) + series({1, -1});
    EXPECT_EQ(s.order(), 1u);
    EXPECT_EQ(s[0], Rational(2));
    EXPECT_TRUE(s[1].is_zero());

    const auto t = series({3, -2, 5});
    EXPECT_EQ(t + PowerSeries::zero(2), t);
}

TEST(PowerSeries, AddDoubledSomosSeries)
{
    const auto y = series({0, 1, 1, 1, 3, 8, 23});
    const auto twice = y + y;
    EXPECT_EQ(std::vector<Rational>(twice.coeffs().begin(), twice.coeffs().end()), ints({0, 2, 2, 2, 6, 16, 46}));
}

TEST(PowerSeries, OrderIsMinimumOfInputs)
{
    const auto a = PowerSeries::constant(Rational(1), 7);
    const auto b = PowerSeries::constant(Rational(1), 3);
    EXPECT_EQ((a + b).order(), 3u);
    EXPECT_EQ((a * b).order(), 3u);
    EXPECT_EQ((a - b).order(), 3u);
}

TEST(PowerSeries, MultiplySmall)
{
    const auto p = series({1, 1, 0, 0}) * series({1, -1, 0, 0});
    EXPECT_EQ(std::vector<Rational>(p.coeffs().begin(), p.coeffs().end()), ints({1, 0, -1, 0}));
    const auto t = series({4, -1, 2});
    EXPECT_EQ(t * PowerSeries::constant(Rational(1), 2), t);
}

TEST(PowerSeries, GeometricSquaredMatchesConvolutionLoop)
{
    constexpr std::size_t n = 15;
    const auto g = PowerSeries(std::vector<Rational>(n + 1, Rational(1)));
    const auto sq = g * g;
    for (std::size_t k = 0; k <= n; ++k) {
        // Direct count of pairs (i, k - i).
        long pairs = 0;
        for (std::size_t i = 0; i <= k; ++i) {
            ++pairs;
        }
        EXPECT_EQ(sq[k], Rational(pairs));
        EXPECT_EQ(sq[k], Rational(static_cast<long>(k + 1)));
    }
}

TEST(PowerSeries, InverseExamples)
{
    const auto inv = inverse(series({1, -1, 0, 0, 0}));
    EXPECT_EQ(std::vector<Rational>(inv.coeffs().begin(), inv.coeffs().end()), ints({1, 1, 1, 1, 1}));

    const auto half = inverse(PowerSeries::constant(Rational(2), 3));
    EXPECT_EQ(half[0], Rational(1, 2));
    EXPECT_TRUE(half[1].is_zero() && half[2].is_zero() && half[3].is_zero());

    EXPECT_THROW(inverse(series({0, 1, 2})), zero_constant_term);
}

TEST(PowerSeries, InverseIsTwoSidedOnRandomSeries)
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        auto s = hsomos::testing::random_series(rng, 10);
        if (s[0].is_zero()) {
            s = s + PowerSeries::constant(Rational(1), 10);
        }
        if (s[0].is_zero()) {
            continue;
        }
        const auto one = PowerSeries::constant(Rational(1), 10);
        EXPECT_EQ(s * inverse(s), one);
        EXPECT_EQ(inverse(s) * s, one);
    }
}

TEST(PowerSeries, RingAxiomsOnRandomSeries)
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = hsomos::testing::random_series(rng, 8);
        const auto b = hsomos::testing::random_series(rng, 8);
        const auto c = hsomos::testing::random_series(rng, 8);
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a + b, b + a);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a - a, PowerSeries::zero(8));
    }
}

TEST(PowerSeries, ShiftsAndTruncation)
{
    const auto s = series({5, 6, 7, 8});
    EXPECT_EQ(s.shifted_down(2), series({7, 8}));
    EXPECT_EQ(s.shifted_up(1), series({0, 5, 6, 7}));
    EXPECT_EQ(s.truncated(1), series({5, 6}));
    EXPECT_THROW(s.truncated(4), insufficient_order);
    EXPECT_THROW(s.shifted_down(4), insufficient_order);
}

TEST(FixedPoint, SomosSeedSeries)
{
    constexpr std::size_t n = 6;
    const auto z = PowerSeries::monomial(Rational(1), 1, n);
    const auto z3 = PowerSeries::monomial(Rational(1), 3, n);
    const auto y = fixed_point_solve([&](const PowerSeries &y) { return z - z3 + y * y; }, n);
    EXPECT_EQ(std::vector<Rational>(y.coeffs().begin(), y.coeffs().end()), ints({0, 1, 1, 1, 3, 8, 23}));
    EXPECT_EQ(y, z - z3 + y * y);
}

TEST(FixedPoint, Geometric)
{
    const auto x = PowerSeries::monomial(Rational(1), 1, 9);
    const auto g = fixed_point_solve([&](const PowerSeries &G) { return PowerSeries::constant(1, 9) + x * G; }, 9);
    EXPECT_EQ(g, PowerSeries(std::vector<Rational>(10, Rational(1))));
}

TEST(FixedPoint, MotzkinSatisfiesDefiningEquation)
{
    constexpr std::size_t n = 5;
    const auto x = PowerSeries::monomial(Rational(1), 1, n);
    const auto one = PowerSeries::constant(Rational(1), n);
    auto map = [&](const PowerSeries &G) { return one + x * G + x * x * G * G; };
    const auto m = fixed_point_solve(map, n);
    EXPECT_EQ(m, map(m));
    EXPECT_EQ(std::vector<Rational>(m.coeffs().begin(), m.coeffs().end()), ints({1, 1, 2, 4, 9, 21}));
}

TEST(FixedPoint, NonContractiveMapsRejected)
{
    EXPECT_THROW(fixed_point_solve([](const PowerSeries &G) { return G; }, 5), not_contractive);
    // 2G - 1 diverges from zero.
    EXPECT_THROW(fixed_point_solve(
                     [](const PowerSeries &G) {
                         return Rational(2) * G - PowerSeries::constant(Rational(1), G.order());
                     },
                     5),
                 not_contractive);
}

TEST(FixedPoint, ShortMapOutputRejected)
{
    EXPECT_THROW(fixed_point_solve([](const PowerSeries &) { return PowerSeries::zero(2); }, 5), insufficient_order);
}

TEST(FixedPoint, Deterministic)
{
    const auto x = PowerSeries::monomial(Rational(1), 1, 12);
    auto map = [&](const PowerSeries &G) {
        return PowerSeries::constant(Rational(1, 3), 12) + Rational(2, 7) * x * G * G;
    };
    EXPECT_EQ(fixed_point_solve(map, 12), fixed_point_solve(map, 12));
}
