#ifndef HSOMOS_REPORT_HPP
#define HSOMOS_REPORT_HPP

#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <hsomos/rational.hpp>
#include <hsomos/verify.hpp>

namespace hsomos
{

namespace detail
{

inline nlohmann::ordered_json rational_array(const std::vector<Rational> &v)
{
    auto arr = nlohmann::ordered_json::array();
    for (const auto &q : v) {
        arr.push_back(q.fraction_str());
    }
    return arr;
}

template <typename T>
nlohmann::ordered_json optional_index(const std::optional<T> &v)
{
    return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

inline std::string join(const std::vector<Rational> &v, const char *sep = ", ")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? sep : "") + v[i].str();
    }
    return out;
}

} // namespace detail

// Key order is fixed; rationals are "p/q" strings (q = 1 included).
inline nlohmann::ordered_json to_json(const VerificationReport &r)
{
    using nlohmann::ordered_json;
    auto nullable = [](const std::optional<Rational> &q) {
        return q ? ordered_json(q->fraction_str()) : ordered_json(nullptr);
    };
    const auto &cert = r.certificate;

    ordered_json j;
    j["preset"] = r.preset;
    auto bindings = ordered_json::object();
    for (const auto &[name, value] : r.bindings) {
        bindings[name] = value.fraction_str();
    }
    j["bindings"] = std::move(bindings);
    j["nmax"] = r.n_max;
    j["hankel_g"] = detail::rational_array(r.hankel_g);
    j["hankel_g0"] = detail::rational_array(r.hankel_g0);
    j["alpha"] = nullable(cert ? std::optional(cert->alpha) : std::nullopt);
    j["beta"] = nullable(cert ? std::optional(cert->beta) : std::nullopt);
    j["a1"] = nullable(cert ? std::optional(cert->a1) : std::nullopt);
    j["f1"] = nullable(cert ? std::optional(cert->f1) : std::nullopt);
    j["fitted_alpha"] = nullable(r.fitted ? std::optional(r.fitted->params.alpha) : std::nullopt);
    j["fitted_beta"] = nullable(r.fitted ? std::optional(r.fitted->params.beta) : std::nullopt);
    j["fit_degenerate"] = r.fitted ? ordered_json(r.fitted->degenerate) : ordered_json(nullptr);
    ordered_json residuals;
    residuals["somos"] = detail::rational_array(r.somos);
    residuals["eq8"] = detail::rational_array(r.eq8);
    residuals["eq10"] = detail::rational_array(r.eq10);
    residuals["tn"] = detail::rational_array(r.tn);
    j["residuals"] = std::move(residuals);
    j["eq10_first_index"] = detail::optional_index(r.eq10_first_index);
    j["lemma2_shift_ok"] = r.lemma2_shift_ok;
    j["breakdown_index"] = detail::optional_index(r.breakdown_index);
    j["pass"] = r.pass;
    // Supplementary keys follow the stable ones.
    j["expected_alpha"] = r.expected.alpha.fraction_str();
    j["expected_beta"] = r.expected.beta.fraction_str();
    j["somos_from_h0"] = detail::rational_array(r.somos_from_h0);
    j["notes"] = r.notes;
    return j;
}

inline std::string csv_header()
{
    return "n,H_n,somos_residual\n";
}

// One row per n = 0..n_max. The residual column holds the certified relation
// whose highest term is H_n, blank where it is not defined.
inline std::string to_csv_rows(const VerificationReport &r, const std::string &prefix = "")
{
    const std::size_t first = r.hankel_g.size() - (r.somos.size() + 4) + 4;
    std::ostringstream os;
    for (std::size_t n = 0; n < r.hankel_g.size(); ++n) {
        os << prefix << n << ',' << r.hankel_g[n].str() << ',';
        if (n >= first && n - first < r.somos.size()) {
            os << r.somos[n - first].str();
        }
        os << '\n';
    }
    return os.str();
}

inline std::string to_csv(const VerificationReport &r)
{
    return csv_header() + to_csv_rows(r);
}

inline std::string to_text(const VerificationReport &r)
{
    std::ostringstream os;
    os << "preset: " << r.preset << '\n';
    if (!r.bindings.empty()) {
        os << "bindings:";
        for (const auto &[name, value] : r.bindings) {
            os << ' ' << name << '=' << value;
        }
        os << '\n';
    }
    os << "nmax: " << r.n_max << '\n';
    os << "H(g):  " << detail::join(r.hankel_g) << '\n';
    os << "H(g0): " << detail::join(r.hankel_g0) << '\n';
    if (r.certificate) {
        os << "certificate: alpha=" << r.certificate->alpha << " beta=" << r.certificate->beta
           << " a1=" << r.certificate->a1 << " f1=" << r.certificate->f1 << '\n';
    }
    os << "expected: alpha=" << r.expected.alpha << " beta=" << r.expected.beta << '\n';
    if (r.fitted) {
        os << "fitted: alpha=" << r.fitted->params.alpha << " beta=" << r.fitted->params.beta
           << (r.fitted->degenerate ? " (degenerate)" : "") << '\n';
    } else {
        os << "fitted: none\n";
    }
    os << "residuals somos: " << detail::join(r.somos) << '\n';
    os << "residuals eq8:   " << detail::join(r.eq8) << '\n';
    os << "residuals eq10:  " << detail::join(r.eq10) << '\n';
    os << "residuals T(n):  " << detail::join(r.tn) << '\n';
    os << "eq10 first index: " << (r.eq10_first_index ? std::to_string(*r.eq10_first_index) : "none") << '\n';
    os << "lemma2 shift: " << (r.lemma2_shift_ok ? "ok" : "FAILED") << '\n';
    if (r.breakdown_index) {
        os << "orbit breakdown at step " << *r.breakdown_index << '\n';
    }
    for (const auto &note : r.notes) {
        os << "note: " << note << '\n';
    }
    os << "result: " << (r.pass ? "PASS" : "FAIL") << '\n';
    return os.str();
}

} // namespace hsomos

#endif
