#ifndef HSOMOS_VERIFY_HPP
#define HSOMOS_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <hsomos/cf_engine.hpp>
#include <hsomos/errors.hpp>
#include <hsomos/gf_lang.hpp>
#include <hsomos/hankel.hpp>
#include <hsomos/power_series.hpp>
#include <hsomos/presets.hpp>
#include <hsomos/rational.hpp>
#include <hsomos/somos.hpp>

namespace hsomos
{

// Outcome of checking one preset at one binding. Residual vectors are exact;
// a check passes only when every entry is zero.
struct VerificationReport {
    std::string preset;
    Bindings bindings;
    std::size_t n_max = 0;

    // H_0..H_{n_max} of g, and H_0..H_{n_max-1} of g0 = tau(g).
    std::vector<Rational> hankel_g;
    std::vector<Rational> hankel_g0;

    std::optional<SomosCertificate> certificate;
    Somos4Params expected;
    std::optional<SomosFit> fitted;

    // Somos residuals on the certified sequence: {H_n(g)}_{n>=1} for the
    // J-fraction presets, {H_n(Q)}_{n>=0} for the seed. Entry k is the
    // relation whose highest term is the (k+4)-th element.
    std::vector<Rational> somos;
    // The same relation on {H_n(g)}_{n>=0}, reported but not required.
    std::vector<Rational> somos_from_h0;
    // Orbit identities: eq8[k] at n = k, eq10[k] at n = k + 2, tn[k] at n = k + 1.
    std::vector<Rational> eq8;
    std::vector<Rational> eq10;
    std::vector<Rational> tn;
    std::optional<std::size_t> eq10_first_index;

    bool canonical_ok = false;
    bool lemma2_shift_ok = false;
    bool fit_ok = false;
    std::optional<std::size_t> breakdown_index;
    std::vector<std::string> notes;
    bool pass = false;
};

namespace detail
{

inline bool all_zero(std::span<const Rational> v)
{
    return std::all_of(v.begin(), v.end(), [](const Rational &q) { return q.is_zero(); });
}

// Shared tail of the pipelines. `g` is the series under test at order
// >= 2 n_max, `form` its canonical parameters. With `certify_tau` the
// certificate is taken on tau(form) and the Somos sequence starts at H_1(g),
// otherwise on `form` itself starting at H_0(g).
inline void run_checks(VerificationReport &rep, const PowerSeries &g, const CFParams &form, bool certify_tau)
{
    const std::size_t n_max = rep.n_max;
    const std::size_t order = 2 * n_max;

    rep.canonical_ok = series_from_cf(form, order) == g;
    if (!rep.canonical_ok) {
        rep.notes.push_back("canonical form does not reproduce the series");
    }

    const CFParams g0 = tau_transform(form);
    const CFParams certified = certify_tau ? g0 : form;
    rep.certificate = theorem1_certificate(certified);

    rep.hankel_g = hankel_transform(g, n_max);
    rep.hankel_g0 = hankel_transform(series_from_cf(g0, order), n_max - 1);

    // H_n(g) = a^n H_{n-1}(g0).
    rep.lemma2_shift_ok = true;
    for (std::size_t n = 1; n <= n_max; ++n) {
        if (rep.hankel_g[n] != pow(form.a, static_cast<unsigned>(n)) * rep.hankel_g0[n - 1]) {
            rep.lemma2_shift_ok = false;
            rep.notes.push_back("one-step shift fails at n = " + std::to_string(n));
            break;
        }
    }

    const std::span<const Rational> certified_seq
        = certify_tau ? std::span<const Rational>(rep.hankel_g).subspan(1) : std::span<const Rational>(rep.hankel_g);
    rep.somos = somos4_residuals(certified_seq, rep.expected);
    rep.somos_from_h0 = somos4_residuals(rep.hankel_g, rep.expected);
    if (certify_tau) {
        rep.notes.push_back(all_zero(rep.somos_from_h0) ? "relation also holds on the H_0-anchored sequence"
                                                        : "relation fails on the H_0-anchored sequence");
    }

    rep.fitted = somos4_fit(certified_seq);
    if (certified_seq.size() < 8) {
        rep.fit_ok = true;
        rep.notes.push_back("sequence too short for an independent (alpha, beta) fit");
    } else if (!rep.fitted) {
        rep.fit_ok = false;
        rep.notes.push_back("no (alpha, beta) fits the Hankel transform");
    } else if (rep.fitted->degenerate) {
        // The expected pair must lie in the solution set; the residuals say so.
        rep.fit_ok = all_zero(rep.somos);
        rep.notes.push_back("fit is degenerate");
    } else {
        rep.fit_ok = rep.fitted->params == rep.expected;
        if (!rep.fit_ok) {
            rep.notes.push_back("fitted (alpha, beta) disagrees with the closed form");
        }
    }

    const auto orbit = tau_orbit(certified, n_max);
    rep.breakdown_index = orbit.breakdown;
    const auto &cert = *rep.certificate;
    for (std::size_t n = 0; n + 2 < orbit.size() && n + 2 <= n_max; ++n) {
        rep.eq8.push_back(theorem3_residual(orbit, cert, n));
    }
    for (std::size_t n = 2; n < orbit.size(); ++n) {
        rep.eq10.push_back(orbit_somos_residual(orbit, cert.alpha, cert.beta, n));
    }
    for (std::size_t n = 1; n < orbit.size(); ++n) {
        rep.tn.push_back(theorem1_T_residual(orbit, cert, n));
    }
    // Smallest n from which every computed a-level relation holds.
    if (!rep.eq10.empty() && rep.eq10.back().is_zero()) {
        std::size_t k = rep.eq10.size();
        while (k > 0 && rep.eq10[k - 1].is_zero()) {
            --k;
        }
        rep.eq10_first_index = k + 2;
    }

    const bool cert_ok = cert.alpha == rep.expected.alpha && cert.beta == rep.expected.beta;
    if (!cert_ok) {
        rep.notes.push_back("certificate differs from the closed-form parameters");
    }
    const bool eq10_ok = rep.eq10.size() <= 1 || all_zero(std::span<const Rational>(rep.eq10).subspan(1));
    rep.pass = rep.canonical_ok && rep.lemma2_shift_ok && cert_ok && rep.fit_ok && all_zero(rep.somos)
               && all_zero(rep.eq8) && eq10_ok && all_zero(rep.tn);
}

} // namespace detail

// Full pipeline for one of the J-fraction presets at one binding.
inline VerificationReport verify_preset(PresetId id, const Bindings &env, std::size_t n_max);

// y = z - z^3 + y^2, Q = (y - z)/z^2, and the classical Somos-4 check on
// the Hankel transform of Q.
inline VerificationReport somos_seed_pipeline(std::size_t n_max)
{
    if (n_max < 6) {
        throw error("the Somos seed pipeline needs n_max >= 6");
    }
    const auto &pre = preset(PresetId::somos_seed);
    VerificationReport rep;
    rep.preset = std::string(pre.name);
    rep.n_max = n_max;
    rep.expected = pre.expected_params({});

    const std::size_t order = 2 * n_max + 2;
    const auto z = PowerSeries::monomial(Rational(1), 1, order);
    const auto z3 = PowerSeries::monomial(Rational(1), 3, order);
    const auto y = fixed_point_solve([&](const PowerSeries &y) { return z - z3 + y * y; }, order);

    const std::array<Rational, 6> known{1, 1, 1, 3, 8, 23};
    bool seed_ok = y[0].is_zero();
    for (std::size_t k = 1; k <= 6; ++k) {
        seed_ok = seed_ok && y[k] == known[k - 1];
    }
    if (!seed_ok) {
        rep.notes.push_back("y-series does not start z + z^2 + z^3 + 3z^4 + 8z^5 + 23z^6");
    }

    const auto q = y.shifted_down(2);
    detail::run_checks(rep, q, pre.canonical({}), false);
    rep.pass = rep.pass && seed_ok;
    return rep;
}

inline VerificationReport verify_preset(PresetId id, const Bindings &env, std::size_t n_max)
{
    if (id == PresetId::somos_seed) {
        return somos_seed_pipeline(n_max);
    }
    if (n_max < 8) {
        throw error("verification needs n_max >= 8");
    }
    const auto &pre = preset(id);
    VerificationReport rep;
    rep.preset = std::string(pre.name);
    rep.n_max = n_max;
    for (const auto &name : pre.param_names) {
        rep.bindings[name] = detail::bound(env, name);
    }
    rep.expected = pre.expected_params(rep.bindings);

    const CFParams form = pre.canonical(rep.bindings);
    if (form.a.is_zero()) {
        throw degenerate_bindings("leading coefficient of g vanishes");
    }
    if (tau_transform(form).a.is_zero()) {
        throw degenerate_bindings("leading coefficient of tau(g) vanishes");
    }

    const auto g = eval_gf(parse_gf(pre.expr_text), rep.bindings, 2 * n_max);
    detail::run_checks(rep, g, form, true);
    return rep;
}

struct SweepResult {
    std::vector<VerificationReport> reports;
    // Degenerate draws that were discarded and redrawn.
    std::vector<Bindings> skipped;
};

namespace detail
{

// Numerator in [-5, 5], denominator in [1, 3]. Uses the raw engine output so
// the draws are identical across standard library implementations.
inline Rational draw_small_rational(std::mt19937_64 &rng)
{
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = static_cast<long>(rng() % 3) + 1;
    return Rational(num, den);
}

} // namespace detail

inline SweepResult verify_sweep(PresetId id, std::size_t samples, std::uint64_t rng_seed, std::size_t n_max)
{
    if (samples == 0) {
        throw error("a sweep needs at least one sample");
    }
    const auto &pre = preset(id);
    std::mt19937_64 rng(rng_seed);
    SweepResult out;
    const std::size_t max_draws = 1000 * samples;
    for (std::size_t draw = 0; out.reports.size() < samples; ++draw) {
        if (draw == max_draws) {
            throw error("too many degenerate draws in sweep");
        }
        Bindings env;
        for (const auto &name : pre.param_names) {
            env[name] = detail::draw_small_rational(rng);
        }
        try {
            out.reports.push_back(verify_preset(id, env, n_max));
        } catch (const degenerate_bindings &) {
            out.skipped.push_back(std::move(env));
        }
    }
    return out;
}

} // namespace hsomos

#endif
