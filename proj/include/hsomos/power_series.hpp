#ifndef HSOMOS_POWER_SERIES_HPP
#define HSOMOS_POWER_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <hsomos/errors.hpp>
#include <hsomos/rational.hpp>

namespace hsomos
{

// Truncated formal power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}).
//
// The truncation order N is part of the value. Binary operations return a
// series at the smaller of the two input orders, so a result never claims
// more precision than its inputs carry.
class PowerSeries
{
public:
    // The zero series at order 0.
    PowerSeries() : m_coeffs(1) {}

    explicit PowerSeries(std::vector<Rational> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw error("a power series needs at least one coefficient");
        }
    }

    static PowerSeries zero(std::size_t order)
    {
        return PowerSeries(std::vector<Rational>(order + 1));
    }
    static PowerSeries constant(const Rational &c, std::size_t order)
    {
        auto s = zero(order);
        s.m_coeffs[0] = c;
        return s;
    }
    // c * x^k; vanishes identically when k > order.
    static PowerSeries monomial(const Rational &c, std::size_t k, std::size_t order)
    {
        auto s = zero(order);
        if (k <= order) {
            s.m_coeffs[k] = c;
        }
        return s;
    }

    std::size_t order() const noexcept
    {
        return m_coeffs.size() - 1;
    }
    const Rational &operator[](std::size_t k) const
    {
        return m_coeffs.at(k);
    }
    std::span<const Rational> coeffs() const noexcept
    {
        return m_coeffs;
    }

    PowerSeries truncated(std::size_t order) const
    {
        if (order > this->order()) {
            throw insufficient_order("cannot raise truncation order from " + std::to_string(this->order())
                                     + " to " + std::to_string(order));
        }
        return PowerSeries(std::vector<Rational>(m_coeffs.begin(), m_coeffs.begin() + order + 1));
    }

    // Multiply by x^k at the same truncation order.
    PowerSeries shifted_up(std::size_t k) const
    {
        auto s = zero(order());
        for (std::size_t i = k; i <= order(); ++i) {
            s.m_coeffs[i] = m_coeffs[i - k];
        }
        return s;
    }
    // Divide by x^k, dropping the first k coefficients. The order drops by k.
    PowerSeries shifted_down(std::size_t k) const
    {
        if (k > order()) {
            throw insufficient_order("cannot drop " + std::to_string(k) + " coefficients from a series of order "
                                     + std::to_string(order()));
        }
        return PowerSeries(std::vector<Rational>(m_coeffs.begin() + k, m_coeffs.end()));
    }

    // Coefficient-wise equality through order k (both series must reach k).
    bool agrees_through(const PowerSeries &o, std::size_t k) const
    {
        if (k > order() || k > o.order()) {
            return false;
        }
        return std::equal(m_coeffs.begin(), m_coeffs.begin() + k + 1, o.m_coeffs.begin());
    }

    // Equality up to the smaller truncation order.
    friend bool operator==(const PowerSeries &a, const PowerSeries &b)
    {
        return a.agrees_through(b, std::min(a.order(), b.order()));
    }

    friend PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
    {
        auto r = zero(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) {
            r.m_coeffs[k] = a.m_coeffs[k] + b.m_coeffs[k];
        }
        return r;
    }
    friend PowerSeries operator-(const PowerSeries &a, const PowerSeries &b)
    {
        auto r = zero(std::min(a.order(), b.order()));
        for (std::size_t k = 0; k <= r.order(); ++k) {
            r.m_coeffs[k] = a.m_coeffs[k] - b.m_coeffs[k];
        }
        return r;
    }
    friend PowerSeries operator-(PowerSeries a)
    {
        for (auto &c : a.m_coeffs) {
            c = -c;
        }
        return a;
    }
    friend PowerSeries operator*(const Rational &q, PowerSeries a)
    {
        for (auto &c : a.m_coeffs) {
            c *= q;
        }
        return a;
    }
    friend PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
    {
        const std::size_t n = std::min(a.order(), b.order());
        auto r = zero(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (a.m_coeffs[i].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; i + j <= n; ++j) {
                if (!b.m_coeffs[j].is_zero()) {
                    r.m_coeffs[i + j] += a.m_coeffs[i] * b.m_coeffs[j];
                }
            }
        }
        return r;
    }
    friend PowerSeries operator/(const PowerSeries &a, const PowerSeries &b);

    friend std::ostream &operator<<(std::ostream &os, const PowerSeries &s)
    {
        for (std::size_t k = 0; k <= s.order(); ++k) {
            os << (k ? ", " : "") << s.m_coeffs[k];
        }
        return os;
    }

private:
    std::vector<Rational> m_coeffs;
};

// Multiplicative inverse through the same order, by the usual triangular
// recurrence t_k = -(s_1 t_{k-1} + ... + s_k t_0) / s_0.
inline PowerSeries inverse(const PowerSeries &s)
{
    if (s[0].is_zero()) {
        throw zero_constant_term("series inverse needs a nonzero constant term");
    }
    const std::size_t n = s.order();
    std::vector<Rational> t(n + 1);
    const Rational inv0 = Rational(1) / s[0];
    t[0] = inv0;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (!s[j].is_zero()) {
                acc += s[j] * t[k - j];
            }
        }
        t[k] = -acc * inv0;
    }
    return PowerSeries(std::move(t));
}

inline PowerSeries operator/(const PowerSeries &a, const PowerSeries &b)
{
    return a * inverse(b);
}

inline PowerSeries pow(const PowerSeries &base, unsigned exponent)
{
    auto result = PowerSeries::constant(Rational(1), base.order());
    auto sq = base;
    while (exponent != 0u) {
        if (exponent & 1u) {
            result = result * sq;
        }
        exponent >>= 1;
        if (exponent != 0u) {
            sq = sq * sq;
        }
    }
    return result;
}

using SeriesMap = std::function<PowerSeries(const PowerSeries &)>;

// Unique solution of G = map(G) through order N.
//
// Iterates from the zero series N + 2 times, then requires the last two
// iterates to agree through N. Stabilization alone cannot reject maps such as
// G -> G, for which zero is one of many fixed points, so the solution is also
// probed: perturbing it by x^k (1 <= k <= N) must leave map(G) unchanged
// through order k. A genuine x-adic contraction passes both checks.
inline PowerSeries fixed_point_solve(const SeriesMap &map, std::size_t order)
{
    auto apply = [&](const PowerSeries &g) {
        auto out = map(g);
        if (out.order() < order) {
            throw insufficient_order("fixed-point map returned order " + std::to_string(out.order())
                                     + ", need " + std::to_string(order));
        }
        return out.truncated(order);
    };

    auto current = PowerSeries::zero(order);
    auto previous = current;
    for (std::size_t it = 0; it < order + 2; ++it) {
        previous = std::move(current);
        current = apply(previous);
    }
    if (!current.agrees_through(previous, order)) {
        throw not_contractive("fixed-point iteration did not stabilize through order " + std::to_string(order));
    }
    if (!apply(current).agrees_through(current, order)) {
        throw not_contractive("fixed-point iterate is not a solution through order " + std::to_string(order));
    }
    for (std::size_t k = 1; k <= order; ++k) {
        const auto probe = apply(current + PowerSeries::monomial(Rational(1), k, order));
        if (!probe.agrees_through(current, k)) {
            throw not_contractive("map does not increase x-adic agreement at order " + std::to_string(k));
        }
    }
    return current;
}

} // namespace hsomos

#endif
