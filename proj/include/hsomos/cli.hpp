#ifndef HSOMOS_CLI_HPP
#define HSOMOS_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <hsomos/cf_engine.hpp>
#include <hsomos/errors.hpp>
#include <hsomos/gf_lang.hpp>
#include <hsomos/hankel.hpp>
#include <hsomos/presets.hpp>
#include <hsomos/rational.hpp>
#include <hsomos/report.hpp>
#include <hsomos/somos.hpp>
#include <hsomos/verify.hpp>

namespace hsomos
{

enum exit_code : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_degenerate = 3 };

struct CommandResult {
    int exit_code = exit_ok;
    std::string out;
    std::string err;
};

namespace detail
{

// Bad command-line input that is not caught by CLI11 itself.
class usage_error : public error
{
public:
    using error::error;
};

inline std::vector<Rational> parse_rational_list(const std::string &text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto b = item.find_first_not_of(" \t");
        const auto e = item.find_last_not_of(" \t");
        if (b == std::string::npos) {
            throw usage_error("empty entry in list '" + text + "'");
        }
        out.push_back(Rational::parse(item.substr(b, e - b + 1)));
    }
    return out;
}

inline CFParams parse_cf(const std::string &text)
{
    const auto v = parse_rational_list(text);
    if (v.size() != 6) {
        throw usage_error("--cf expects six comma-separated rationals a,b,c,d,e,f");
    }
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

inline Bindings parse_params(const std::vector<std::string> &items)
{
    Bindings env;
    for (const auto &item : items) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0) {
            throw usage_error("--param expects name=value, got '" + item + "'");
        }
        env[item.substr(0, eq)] = Rational::parse(item.substr(eq + 1));
    }
    return env;
}

inline std::string join_values(std::span<const Rational> v)
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += (i ? ", " : "") + v[i].str();
    }
    return out;
}

} // namespace detail

// Runs one CLI invocation; `args` excludes the program name.
inline CommandResult run_command(const std::vector<std::string> &args)
{
    std::ostringstream out, err;
    CommandResult result;

    CLI::App app{"Exact Hankel transforms of quadratic continued fractions and (alpha, beta) Somos-4 checks",
                 "hsomos"};
    app.require_subcommand(1);

    std::string expr_text, cf_text, values_text, preset_name, format = "text";
    std::vector<std::string> param_items;
    std::size_t nmax = 10, steps = 5, order = 20, samples = 20;
    std::uint64_t seed = 42;

    auto add_source = [&](CLI::App *cmd) {
        auto *e = cmd->add_option("--expr", expr_text, "generating-function expression");
        auto *c = cmd->add_option("--cf", cf_text, "canonical parameters a,b,c,d,e,f");
        e->excludes(c);
        cmd->add_option("--param", param_items, "variable binding name=value (repeatable)");
    };
    auto add_format = [&](CLI::App *cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
    };

    auto *series_cmd = app.add_subcommand("series", "print series coefficients 0..nmax");
    add_source(series_cmd);
    series_cmd->add_option("--nmax", nmax, "truncation order");

    auto *hankel_cmd = app.add_subcommand("hankel", "print the Hankel transform H_0..H_nmax");
    add_source(hankel_cmd);
    hankel_cmd->add_option("--nmax", nmax, "largest determinant size");

    auto *tau_cmd = app.add_subcommand("tau", "print the orbit of the quadratic transformation");
    tau_cmd->add_option("--cf", cf_text, "canonical parameters a,b,c,d,e,f")->required();
    tau_cmd->add_option("--steps", steps, "number of transformation steps");

    auto *fit_cmd = app.add_subcommand("fit", "fit the canonical continued-fraction form to a series");
    fit_cmd->add_option("--expr", expr_text, "generating-function expression")->required();
    fit_cmd->add_option("--param", param_items, "variable binding name=value (repeatable)");
    fit_cmd->add_option("--order", order, "series order used for the fit");

    auto *somos_fit_cmd = app.add_subcommand("somos-fit", "fit (alpha, beta) to a sequence");
    somos_fit_cmd->add_option("--values", values_text, "comma-separated sequence")->required();

    auto *verify_cmd = app.add_subcommand("verify", "run the verification pipeline for a preset");
    verify_cmd->add_option("--preset", preset_name, "conj2|conj3|conj4|conj5|somos")->required();
    verify_cmd->add_option("--param", param_items, "variable binding name=value (repeatable)");
    verify_cmd->add_option("--nmax", nmax, "largest Hankel index");
    add_format(verify_cmd);

    auto *sweep_cmd = app.add_subcommand("sweep", "verify a preset at random small-rational bindings");
    sweep_cmd->add_option("--preset", preset_name, "conj2|conj3|conj4|conj5|somos")->required();
    sweep_cmd->add_option("--samples", samples, "accepted samples");
    sweep_cmd->add_option("--seed", seed, "generator seed");
    sweep_cmd->add_option("--nmax", nmax, "largest Hankel index");
    add_format(sweep_cmd);

    auto source_series = [&](std::size_t ord) {
        if (!cf_text.empty()) {
            return series_from_cf(detail::parse_cf(cf_text), ord);
        }
        if (expr_text.empty()) {
            throw detail::usage_error("one of --expr or --cf is required");
        }
        return eval_gf(parse_gf(expr_text), detail::parse_params(param_items), ord);
    };
    auto lookup_preset = [&] {
        const auto id = preset_from_name(preset_name);
        if (!id) {
            throw detail::usage_error("unknown preset '" + preset_name + "'");
        }
        return *id;
    };

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);

        if (series_cmd->parsed()) {
            out << source_series(nmax) << '\n';
        } else if (hankel_cmd->parsed()) {
            const auto s = source_series(nmax == 0 ? 0 : 2 * nmax - 2);
            out << detail::join_values(hankel_transform(s, nmax)) << '\n';
        } else if (tau_cmd->parsed()) {
            const auto orbit = tau_orbit(detail::parse_cf(cf_text), steps);
            out << "n\ta\tb\tc\td\te\tf\n";
            for (std::size_t n = 0; n < orbit.size(); ++n) {
                const auto &p = orbit.steps[n];
                out << n << '\t' << p.a << '\t' << p.b << '\t' << p.c << '\t' << p.d << '\t' << p.e << '\t' << p.f
                    << '\n';
            }
            if (orbit.breakdown) {
                out << "breakdown at step " << *orbit.breakdown << " (a = 0)\n";
                if (*orbit.breakdown == 0) {
                    result.exit_code = exit_degenerate;
                }
            }
        } else if (fit_cmd->parsed()) {
            const auto s = eval_gf(parse_gf(expr_text), detail::parse_params(param_items), order);
            const auto fit = fit_canonical_cf(s);
            if (fit) {
                out << fit->params << (fit->unique ? "" : " non-unique") << '\n';
            } else {
                out << "none\n";
            }
        } else if (somos_fit_cmd->parsed()) {
            const auto values = detail::parse_rational_list(values_text);
            if (values.size() < 8) {
                throw detail::usage_error("somos-fit needs at least 8 values");
            }
            const auto fit = somos4_fit(values);
            if (fit) {
                out << fit->params.alpha << ", " << fit->params.beta << (fit->degenerate ? " degenerate" : "")
                    << '\n';
            } else {
                out << "none\n";
            }
        } else if (verify_cmd->parsed()) {
            const auto id = lookup_preset();
            const auto report = verify_preset(id, detail::parse_params(param_items), nmax);
            if (format == "json") {
                out << to_json(report).dump(2) << '\n';
            } else if (format == "csv") {
                out << to_csv(report);
            } else {
                out << to_text(report);
            }
            result.exit_code = report.pass ? exit_ok : exit_check_failed;
        } else if (sweep_cmd->parsed()) {
            const auto id = lookup_preset();
            const auto sweep = verify_sweep(id, samples, seed, nmax);
            bool all_pass = true;
            if (format == "json") {
                auto arr = nlohmann::ordered_json::array();
                for (const auto &r : sweep.reports) {
                    arr.push_back(to_json(r));
                }
                out << arr.dump(2) << '\n';
            } else if (format == "csv") {
                out << "sample," << csv_header();
                for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
                    out << to_csv_rows(sweep.reports[i], std::to_string(i) + ",");
                }
            }
            std::size_t passed = 0;
            for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
                const auto &r = sweep.reports[i];
                passed += r.pass ? 1 : 0;
                all_pass = all_pass && r.pass;
                if (format == "text") {
                    out << "sample " << i << ':';
                    for (const auto &[name, value] : r.bindings) {
                        out << ' ' << name << '=' << value;
                    }
                    out << " alpha=" << r.expected.alpha << " beta=" << r.expected.beta << ' '
                        << (r.pass ? "PASS" : "FAIL") << '\n';
                }
            }
            if (format == "text") {
                out << passed << '/' << sweep.reports.size() << " passed, " << sweep.skipped.size()
                    << " degenerate draws skipped\n";
            }
            result.exit_code = all_pass ? exit_ok : exit_check_failed;
        }
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        result.exit_code = code == 0 ? exit_ok : exit_usage;
    } catch (const degenerate_bindings &e) {
        err << "degenerate input: " << e.what() << '\n';
        result.exit_code = exit_degenerate;
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
        result.exit_code = exit_usage;
    }

    result.out = out.str();
    result.err = err.str();
    return result;
}

} // namespace hsomos

#endif
