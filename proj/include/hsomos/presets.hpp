#ifndef HSOMOS_PRESETS_HPP
#define HSOMOS_PRESETS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <hsomos/cf_engine.hpp>
#include <hsomos/errors.hpp>
#include <hsomos/gf_lang.hpp>
#include <hsomos/rational.hpp>
#include <hsomos/somos.hpp>

namespace hsomos
{

enum class PresetId { conj2, conj3, conj4, conj5, somos_seed };

// A generalized J-fraction whose Hankel transform is a known (alpha, beta)
// Somos-4 sequence, plus the closed forms needed to check it.
struct Preset {
    PresetId id;
    std::string_view name;
    // Empty for somos_seed, whose series comes from y = z - z^3 + y^2.
    std::string_view expr_text;
    std::vector<std::string> param_names;
    Somos4Params (*expected_params)(const Bindings &);
    // The defining equation with the (1 - x) denominators cleared. For
    // somos_seed this is the form of Q(z) = (y - z)/z^2.
    CFParams (*canonical)(const Bindings &);
};

namespace detail
{

inline const Rational &bound(const Bindings &env, const std::string &name)
{
    const auto it = env.find(name);
    if (it == env.end()) {
        throw unbound_variable(name);
    }
    return it->second;
}

inline Rational sq(const Rational &q)
{
    return q * q;
}

// g = 1/(1 - x(1+rx)/(1-x) - s x^2 g)  ~  (1 - x)/(1 - 2x - r x^2 + x^2 (-s + s x) g)
inline Somos4Params conj2_expected(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s");
    return {Rational(0), sq(s) * sq(r + s + 1)};
}
inline CFParams conj2_canonical(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s");
    return {1, -1, -2, -r, -s, s};
}

// g = 1/(1 - x(1+rx)/(1-x) - s x^2 g/(1-x))  ~  (1 - x)/(1 - 2x - r x^2 - s x^2 g)
inline Somos4Params conj3_expected(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s");
    return {sq(s), sq(s) * (r + sq(r + s))};
}
inline CFParams conj3_canonical(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s");
    return {1, -1, -2, -r, -s, 0};
}

// g = 1/(1 - x(1+rx)/(1-x) - x^2 (1+sx) g/(1-x))  ~  (1 - x)/(1 - 2x - r x^2 + x^2 (-1 - s x) g)
inline Somos4Params conj4_expected(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s");
    return {sq(s + 1), Rational(1) + sq(r) - Rational(6) * s - Rational(3) * sq(s) - r * (sq(s) + Rational(2) * s - 3)};
}
inline CFParams conj4_canonical(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s");
    return {1, -1, -2, -r, -1, -s};
}

// g = 1/(1 - v x(1+rx)/(1-x) - w x^2 (1+sx) g/(1-x))
//   ~ (1 - x)/(1 - (1+v) x - r v x^2 + x^2 (-w - w s x) g)
inline Somos4Params conj5_expected(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s"), &v = bound(env, "v"), &w = bound(env, "w");
    const Rational alpha = sq(s + v) * sq(w);
    const Rational beta = sq(w)
                          * (sq(r) * sq(v) + w * (w + v - sq(v)) + r * v * (v + Rational(2) * w)
                             - sq(s) * (v * (r + 1) + Rational(2) * w)
                             - s * ((r + 1) * sq(v) + w + v * (r + 1 + Rational(3) * w)));
    return {alpha, beta};
}
inline CFParams conj5_canonical(const Bindings &env)
{
    const auto &r = bound(env, "r"), &s = bound(env, "s"), &v = bound(env, "v"), &w = bound(env, "w");
    return {1, -1, -(v + 1), -(r * v), -w, -(w * s)};
}

// Classical Somos-4: alpha = beta = 1.
inline Somos4Params somos_seed_expected(const Bindings &)
{
    return {1, 1};
}
// y - y^2 = z - z^3 with y = z + z^2 Q gives Q = (1 - z)/(1 - 2z - z^2 Q).
inline CFParams somos_seed_canonical(const Bindings &)
{
    return {1, -1, -2, 0, -1, 0};
}

} // namespace detail

inline const std::array<Preset, 5> &all_presets()
{
    static const std::array<Preset, 5> presets{{
        {PresetId::conj2, "conj2", "1/(1 - x*(1+r*x)/(1-x) - s*x^2*G)", {"r", "s"}, &detail::conj2_expected,
         &detail::conj2_canonical},
        {PresetId::conj3, "conj3", "1/(1 - x*(1+r*x)/(1-x) - s*x^2*G/(1-x))", {"r", "s"}, &detail::conj3_expected,
         &detail::conj3_canonical},
        {PresetId::conj4, "conj4", "1/(1 - x*(1+r*x)/(1-x) - x^2*(1+s*x)*G/(1-x))", {"r", "s"},
         &detail::conj4_expected, &detail::conj4_canonical},
        {PresetId::conj5, "conj5", "1/(1 - v*x*(1+r*x)/(1-x) - w*x^2*(1+s*x)*G/(1-x))", {"r", "s", "v", "w"},
         &detail::conj5_expected, &detail::conj5_canonical},
        {PresetId::somos_seed, "somos", "", {}, &detail::somos_seed_expected, &detail::somos_seed_canonical},
    }};
    return presets;
}

inline const Preset &preset(PresetId id)
{
    for (const auto &p : all_presets()) {
        if (p.id == id) {
            return p;
        }
    }
    throw std::logic_error("unknown preset id");
}

// Accepts "conj2".."conj5", "somos" and "somos_seed".
inline std::optional<PresetId> preset_from_name(std::string_view name)
{
    if (name == "somos_seed") {
        return PresetId::somos_seed;
    }
    for (const auto &p : all_presets()) {
        if (p.name == name) {
            return p.id;
        }
    }
    return std::nullopt;
}

inline Somos4Params expected_somos_params(PresetId id, const Bindings &env)
{
    return preset(id).expected_params(env);
}

} // namespace hsomos

#endif
