#include <random>
#include <vector>

#include <gtest/gtest.h>

#include <hsomos/cf_engine.hpp>
#include <hsomos/hankel.hpp>

#include "test_support.hpp"

using namespace hsomos;
using hsomos::testing::ints;

namespace
{

// Q(z) = (y - z)/z^2 for y = z + z^2 + z^3 + 3z^4 + 8z^5 + 23z^6 + ...
PowerSeries somos_q_series(std::size_t order)
{
    const auto z = PowerSeries::monomial(Rational(1), 1, order + 2);
    const auto z3 = PowerSeries::monomial(Rational(1), 3, order + 2);
    const auto y = fixed_point_solve([&](const PowerSeries &y) { return z - z3 + y * y; }, order + 2);
    return y.shifted_down(2);
}

} // namespace

TEST(HankelMatrix, EmptyAndGeometric)
{
    const auto geo = PowerSeries(std::vector<Rational>(5, Rational(1)));
    EXPECT_EQ(hankel_matrix(geo, 0).size(), 0u);
    const auto m = hankel_matrix(geo, 2);
    EXPECT_EQ(m, RationalMatrix({{1, 1}, {1, 1}}));
}

TEST(HankelMatrix, SomosQSeries)
{
    const auto q = somos_q_series(4);
    EXPECT_EQ(hankel_matrix(q, 3), RationalMatrix({{1, 1, 3}, {1, 3, 8}, {3, 8, 23}}));
}

TEST(HankelMatrix, InsufficientOrder)
{
    const auto s = PowerSeries(std::vector<Rational>(4, Rational(1))); // order 3
    EXPECT_NO_THROW(hankel_matrix(s, 2));
    EXPECT_THROW(hankel_matrix(s, 3), insufficient_order);
    EXPECT_THROW(hankel_transform(s, 3), insufficient_order);
}

TEST(Determinant, SmallCases)
{
    EXPECT_EQ(det_bareiss(RationalMatrix()), Rational(1));
    EXPECT_EQ(det_naive(RationalMatrix()), Rational(1));
    EXPECT_EQ(det_bareiss(RationalMatrix({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})), Rational(1));

    const Rational a(3, 2), b(-1, 3), c(5), d(2, 7);
    const RationalMatrix m({{a, b}, {c, d}});
    EXPECT_EQ(det_naive(m), a * d - b * c);
    EXPECT_EQ(det_bareiss(m), a * d - b * c);

    const RationalMatrix rep({{1, 2, 3}, {4, 5, 6}, {1, 2, 3}});
    EXPECT_EQ(det_naive(rep), Rational(0));
    EXPECT_EQ(det_bareiss(rep), Rational(0));
}

TEST(Determinant, PivotingNeedsRowSwap)
{
    const RationalMatrix m({{0, 1, 2}, {3, 0, 1}, {1, 1, 0}});
    EXPECT_EQ(det_bareiss(m), hsomos::testing::gauss_det(m));
    EXPECT_EQ(det_bareiss(m), Rational(7));
    // Zero column below and at the pivot.
    const RationalMatrix z({{0, 1, 2}, {0, 4, 1}, {0, 1, 7}});
    EXPECT_EQ(det_bareiss(z), Rational(0));
}

TEST(Determinant, NaiveTooLarge)
{
    EXPECT_THROW(det_naive(RationalMatrix(8)), too_large);
    EXPECT_NO_THROW(det_naive(RationalMatrix(7)));
}

TEST(Determinant, BareissMatchesOraclesOnRandomMatrices)
{
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const auto n = static_cast<std::size_t>(trial % 7);
        auto m = hsomos::testing::random_matrix(rng, n);
        if (trial % 9 == 0 && n >= 2) {
            for (std::size_t j = 0; j < n; ++j) {
                m(1, j) = m(0, j) * Rational(2, 3);
            }
        }
        const auto expected = det_naive(m);
        EXPECT_EQ(det_bareiss(m), expected);
        EXPECT_EQ(hsomos::testing::gauss_det(m), expected);
    }
}

TEST(Determinant, RowScalingProperty)
{
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 6);
        auto m = hsomos::testing::random_matrix(rng, n);
        const auto before = det_bareiss(m);
        const auto q = hsomos::testing::small_rational(rng);
        const std::size_t row = static_cast<std::size_t>(trial) % n;
        for (std::size_t j = 0; j < n; ++j) {
            m(row, j) *= q;
        }
        EXPECT_EQ(det_bareiss(m), before * q);
    }
}

TEST(HankelTransform, Geometric)
{
    const auto geo = PowerSeries(std::vector<Rational>(7, Rational(1)));
    EXPECT_EQ(hankel_transform(geo, 4), ints({1, 1, 0, 0, 0}));
}

TEST(HankelTransform, SomosQSeries)
{
    EXPECT_EQ(hankel_transform(somos_q_series(10), 6), ints({1, 1, 2, 3, 7, 23, 59}));
}

TEST(HankelTransform, MatchesOrbitProducts)
{
    const CFParams p{3, -3, -2, 3, -1, 1};
    const auto direct = hankel_transform(series_from_cf(p, 8), 4);
    const auto orbit = hankel_via_orbit(p, 4);
    ASSERT_FALSE(orbit.breakdown);
    EXPECT_EQ(direct, orbit.values);
}

TEST(HankelViaOrbit, Examples)
{
    const auto h = hankel_via_orbit({3, -3, -2, 3, -1, 1}, 2);
    EXPECT_EQ(h.values, ints({1, 3, 9}));

    const auto ones = hankel_via_orbit({1, 0, 0, 0, -1, 0}, 6);
    EXPECT_EQ(ones.values, std::vector<Rational>(7, Rational(1)));

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 10; ++trial) {
        const auto p = hsomos::testing::random_cf(rng);
        const auto v = hankel_via_orbit(p, 1).values;
        ASSERT_EQ(v.size(), 2u);
        EXPECT_EQ(v[0], Rational(1));
        EXPECT_EQ(v[1], p.a);
    }
    EXPECT_THROW(hankel_via_orbit({0, 1, 1, 1, 1, 1}, 3), zero_leading_coefficient);
}

TEST(HankelViaOrbit, BreakdownTruncates)
{
    // Orbit breaks at step 2 (see the cf_engine tests).
    const CFParams p{1, 0, 0, 1, 0, 0};
    const auto h = hankel_via_orbit(p, 6);
    ASSERT_TRUE(h.breakdown);
    EXPECT_EQ(*h.breakdown, 2u);
    ASSERT_EQ(h.values.size(), 3u);
    const auto direct = hankel_transform(series_from_cf(p, 12), 6);
    for (std::size_t n = 0; n < h.values.size(); ++n) {
        EXPECT_EQ(h.values[n], direct[n]);
    }
    EXPECT_EQ(direct[3], Rational(0));
}

TEST(HankelViaOrbit, AgreesWithDeterminantsOnRandomParams)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 50; ++trial) {
        const auto p = hsomos::testing::random_cf(rng);
        const auto orbit = hankel_via_orbit(p, 8);
        const auto direct = hankel_transform(series_from_cf(p, 14), 8);
        for (std::size_t n = 0; n < orbit.values.size(); ++n) {
            EXPECT_EQ(orbit.values[n], direct[n]) << p << " n=" << n;
        }
    }
}
