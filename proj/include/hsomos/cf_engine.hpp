#ifndef HSOMOS_CF_ENGINE_HPP
#define HSOMOS_CF_ENGINE_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include <hsomos/detail/linear_solve.hpp>
#include <hsomos/errors.hpp>
#include <hsomos/power_series.hpp>
#include <hsomos/rational.hpp>

namespace hsomos
{

// Parameters of the quadratic continued-fraction form
//
//     F(x) = (a + b x) / (1 + c x + d x^2 + x^2 (e + f x) F(x)).
struct CFParams {
    Rational a, b, c, d, e, f;

    friend bool operator==(const CFParams &, const CFParams &) = default;

    std::array<Rational, 6> as_array() const
    {
        return {a, b, c, d, e, f};
    }

    friend std::ostream &operator<<(std::ostream &os, const CFParams &p)
    {
        return os << '(' << p.a << ", " << p.b << ", " << p.c << ", " << p.d << ", " << p.e << ", " << p.f << ')';
    }
};

// Power series of the canonical form through the given order.
inline PowerSeries series_from_cf(const CFParams &p, std::size_t order)
{
    const auto numerator = PowerSeries::constant(p.a, order) + PowerSeries::monomial(p.b, 1, order);
    const auto base_den = PowerSeries::constant(Rational(1), order) + PowerSeries::monomial(p.c, 1, order)
                          + PowerSeries::monomial(p.d, 2, order);
    const auto self_coeff = PowerSeries::monomial(p.e, 2, order) + PowerSeries::monomial(p.f, 3, order);
    return fixed_point_solve([&](const PowerSeries &F) { return numerator / (base_den + self_coeff * F); },
                             order);
}

// One step of the quadratic transformation: parameters of G = tau(F), whose
// Hankel determinants satisfy H_n(F) = a^n H_{n-1}(G).
inline CFParams tau_transform(const CFParams &p)
{
    if (p.a.is_zero()) {
        throw zero_leading_coefficient("quadratic transformation needs a != 0");
    }
    const Rational &a = p.a, &b = p.b, &c = p.c, &d = p.d, &e = p.e, &f = p.f;
    const Rational a2 = a * a, a3 = a2 * a, a4 = a3 * a;
    const Rational b2 = b * b, b3 = b2 * b;

    CFParams q;
    q.a = -(a3 * e + a2 * d - a * b * c + b2) / a2;
    q.b = -(a4 * f + c * a3 * d - a2 * c * c * b + Rational(2) * a * c * b2 - a2 * b * d - b3) / a3;
    q.c = c;
    q.d = -(a2 * d - Rational(2) * a * b * c + Rational(2) * b2) / a2;
    q.e = Rational(-1);
    q.f = -b / a;
    return q;
}

// Iterates of tau. Every stored step has a nonzero leading coefficient; if
// the iteration hits a_m = 0 the step is not stored and `breakdown` holds m.
struct TauOrbit {
    std::vector<CFParams> steps;
    std::optional<std::size_t> breakdown;

    std::size_t size() const noexcept
    {
        return steps.size();
    }
    const CFParams &at(std::size_t n) const
    {
        if (n >= steps.size()) {
            throw index_out_of_orbit("orbit step " + std::to_string(n) + " not available (orbit has "
                                     + std::to_string(steps.size()) + " steps)");
        }
        return steps[n];
    }
    const Rational &a(std::size_t n) const
    {
        return at(n).a;
    }
};

// Up to k + 1 parameter tuples p, tau(p), ..., tau^k(p).
inline TauOrbit tau_orbit(const CFParams &p, std::size_t k)
{
    TauOrbit orbit;
    CFParams cur = p;
    for (std::size_t n = 0; n <= k; ++n) {
        if (cur.a.is_zero()) {
            orbit.breakdown = n;
            break;
        }
        orbit.steps.push_back(cur);
        if (n < k) {
            cur = tau_transform(cur);
        }
    }
    return orbit;
}

struct CanonicalFit {
    CFParams params;
    // False when the linear system for (c, d, e, f) has rank < 4.
    bool unique = true;
};

// Finds (a, ..., f) with s (1 + c x + d x^2) + x^2 (e + f x) s^2 = a + b x
// through order(s).
//
// Every order k >= 2 of that identity is linear in (c, d, e, f):
//     c s_{k-1} + d s_{k-2} + e [s^2]_{k-2} + f [s^2]_{k-3} = -s_k.
// All of them are solved together, then a = s_0 and b = s_1 + c s_0.
inline std::optional<CanonicalFit> fit_canonical_cf(const PowerSeries &s)
{
    const std::size_t n = s.order();
    const auto sq = s * s;
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t k = 2; k <= n; ++k) {
        rows.push_back({s[k - 1], s[k - 2], sq[k - 2], k >= 3 ? sq[k - 3] : Rational(0)});
        rhs.push_back(-s[k]);
    }
    const auto sol = detail::solve_linear(std::move(rows), std::move(rhs), 4);
    if (!sol) {
        return std::nullopt;
    }
    CanonicalFit fit;
    fit.params.c = sol->x[0];
    fit.params.d = sol->x[1];
    fit.params.e = sol->x[2];
    fit.params.f = sol->x[3];
    fit.params.a = s[0];
    fit.params.b = n >= 1 ? s[1] + fit.params.c * s[0] : Rational(0);
    fit.unique = sol->rank == 4;

    // Re-check the defining identity directly.
    const auto &p = fit.params;
    const auto lhs = s
                         * (PowerSeries::constant(Rational(1), n) + PowerSeries::monomial(p.c, 1, n)
                            + PowerSeries::monomial(p.d, 2, n))
                     + (PowerSeries::monomial(p.e, 2, n) + PowerSeries::monomial(p.f, 3, n)) * sq;
    const auto rhs_series = PowerSeries::constant(p.a, n) + PowerSeries::monomial(p.b, 1, n);
    if (!lhs.agrees_through(rhs_series, n)) {
        return std::nullopt;
    }
    return fit;
}

// Somos-4 parameters certified by the closed forms for the e = -1 shape.
struct SomosCertificate {
    Rational alpha, beta, a1, f1;

    friend bool operator==(const SomosCertificate &, const SomosCertificate &) = default;
};

// For F = (a0 + b0 x) / (1 + c x + d0 x^2 + x^2 (-1 + f0 x) F), the Hankel
// determinants {H_n(F)}_{n>=0} form an (alpha, beta) Somos-4 sequence with
//     alpha = a0^2 (c + f0 + f1)^2,
//     beta  = -(c + f0 + f1)^2 a0^3 - a1 ((f0 - f1)(c + f0 + f1) - a1) a0^2,
// where f1 = -b0/a0 and a1 = a0 - d0 + (b0/a0)(c - b0/a0).
inline SomosCertificate theorem1_certificate(const CFParams &p)
{
    if (p.e != Rational(-1)) {
        throw wrong_form("Somos certificate needs e = -1, got e = " + p.e.str());
    }
    if (p.a.is_zero()) {
        throw zero_leading_coefficient("Somos certificate needs a != 0");
    }
    const Rational &a0 = p.a, &b0 = p.b, &c = p.c, &d0 = p.d, &f0 = p.f;
    const Rational ratio = b0 / a0;

    SomosCertificate cert;
    cert.f1 = -ratio;
    cert.a1 = a0 - d0 + ratio * (c - ratio);

    const auto next = tau_transform(p);
    if (next.a != cert.a1 || next.f != cert.f1) {
        throw std::logic_error("closed-form a1/f1 disagree with the transformation recursion");
    }

    const Rational sum = c + f0 + cert.f1;
    cert.alpha = a0 * a0 * sum * sum;
    cert.beta = -(sum * sum) * a0 * a0 * a0 - cert.a1 * ((f0 - cert.f1) * sum - cert.a1) * a0 * a0;
    return cert;
}

// a_{n+2} a_{n+1} + a_{n+1} a_n minus its closed form
//     2 a0 a1 + a0 (2 f1 + c)(f0 + c + f1) - a0^2 (f0 + c + f1)^2 / a_{n+1}.
inline Rational theorem3_residual(const TauOrbit &orbit, const SomosCertificate &cert, std::size_t n)
{
    const auto &p0 = orbit.at(0);
    const Rational &an = orbit.a(n), &an1 = orbit.a(n + 1), &an2 = orbit.a(n + 2);
    if (an1.is_zero()) {
        throw zero_divisor("a_{n+1} vanishes");
    }
    const Rational &a0 = p0.a, &c = p0.c, &f0 = p0.f;
    const Rational sum = f0 + c + cert.f1;
    const Rational closed = Rational(2) * a0 * cert.a1 + a0 * (Rational(2) * cert.f1 + c) * sum
                            - a0 * a0 * sum * sum / an1;
    return an2 * an1 + an1 * an - closed;
}

// a_n a_{n-1} a_{n-2} - alpha - beta / a_{n-1}, defined for n >= 2.
inline Rational orbit_somos_residual(const TauOrbit &orbit, const Rational &alpha, const Rational &beta,
                                     std::size_t n)
{
    if (n < 2) {
        throw index_out_of_orbit("orbit Somos residual needs n >= 2, got " + std::to_string(n));
    }
    const Rational &an = orbit.a(n), &an1 = orbit.a(n - 1), &an2 = orbit.a(n - 2);
    if (an1.is_zero()) {
        throw zero_divisor("a_{n-1} vanishes");
    }
    return an * an1 * an2 - alpha - beta / an1;
}

// The numerator T(n) left after eliminating alpha; vanishes for n >= 1.
inline Rational theorem1_T_residual(const TauOrbit &orbit, const SomosCertificate &cert, std::size_t n)
{
    if (n < 1) {
        throw index_out_of_orbit("T(n) needs n >= 1");
    }
    const auto &p0 = orbit.at(0);
    const Rational &a0 = p0.a, &c = p0.c, &f0 = p0.f, &f1 = cert.f1, &a1 = cert.a1;
    const Rational &an = orbit.a(n), &am = orbit.a(n - 1);
    const Rational sum = c + f0 + f1;
    const Rational sum2a02 = sum * sum * a0 * a0;
    const Rational mixed = c * c + c * f0 + Rational(3) * c * f1 + Rational(2) * f0 * f1
                           + Rational(2) * f1 * f1 + Rational(2) * a1;
    return -sum2a02 * am + mixed * an * am * a0 - am * am * an * an - sum2a02 * an - cert.beta;
}

} // namespace hsomos

#endif
