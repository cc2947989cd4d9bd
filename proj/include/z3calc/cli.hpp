#ifndef Z3CALC_CLI_HPP
#define Z3CALC_CLI_HPP

#include <z3calc/suites.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace z3calc::cli
{

enum exit_code : int { ok = 0, failed = 1, bad_input = 2, budget = 3 };

namespace detail
{

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw preset_error("cannot read " + path);
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

inline int emit_report(const report &r, std::ostream &out)
{
    out << to_json(r).dump(2) << "\n";
    return r.passed() ? ok : failed;
}

inline std::string render(const polynomial &p, const presentation &P, const std::string &format, bool unicode)
{
    if (format == "latex") {
        return print(p, P.order, print_style::latex);
    }
    return print(p, P.order, unicode ? print_style::unicode : print_style::text);
}

} // namespace detail

inline int reduce_command(const std::string &preset, const std::string &preset_file, const std::string &qtext,
                          const std::string &format, bool unicode, const std::string &expr, std::ostream &out)
{
    presentation P = preset_file.empty() ? build(preset) : import_preset(detail::read_file(preset_file));
    polynomial p = parse_poly(expr, generator_names(P.gens));
    if (!qtext.empty()) {
        scalar q0 = parse_scalar(qtext);
        if (!q0.is_constant() || q0.constant_value().im() != 0) {
            throw parse_error("--q expects a rational number", 0);
        }
        rational r = q0.constant_value().re();
        P = specialize(P, r);
        p = p.map_coeffs([&](const scalar &c) { return c.specialize_q(r); });
    } else if (P.q) {
        rational r = *P.q;
        p = p.map_coeffs([&](const scalar &c) { return c.specialize_q(r); });
    }
    polynomial nf = normal_form(p, P);
    if (format == "json") {
        nlohmann::json j{{"preset", P.name},
                         {"input", expr},
                         {"normal_form", poly_to_json(nf, P.order)},
                         {"text", print(nf, P.order)}};
        out << j.dump(2) << "\n";
    } else {
        out << detail::render(nf, P, format, unicode) << "\n";
    }
    return ok;
}

inline int pairs_command(const std::string &preset, std::ostream &out)
{
    presentation P = build(preset);
    auto pairs = critical_pairs(P);
    nlohmann::json entries = nlohmann::json::array();
    std::size_t bad = 0;
    for (const auto &cp : pairs) {
        bad += cp.joinable ? 0 : 1;
        entries.push_back({{"overlap", word_text(cp.overlap)},
                           {"rules", {word_text(P.rules[cp.rule1].lhs), word_text(P.rules[cp.rule2].lhs)}},
                           {"branch1", print(cp.branch1, P.order)},
                           {"branch2", print(cp.branch2, P.order)},
                           {"joinable", cp.joinable}});
    }
    nlohmann::json j{{"preset", P.name},
                     {"pairs", pairs.size()},
                     {"non_joinable", bad},
                     {"entries", std::move(entries)}};
    out << j.dump(2) << "\n";
    return ok;
}

inline int presets_list(std::ostream &out)
{
    for (const auto &n : presets::names()) {
        presentation P = build(n);
        out << n << "\t" << P.rules.size() << " rules\n";
    }
    return ok;
}

inline int presets_export(const std::string &name, const std::string &file, std::ostream &out)
{
    std::string text = export_preset(build(name));
    if (file.empty()) {
        out << text;
        return ok;
    }
    std::ofstream f(file, std::ios::binary);
    if (!f) {
        throw preset_error("cannot write " + file);
    }
    f << text;
    return ok;
}

inline int presets_import(const std::string &file, std::ostream &out)
{
    std::string text = detail::read_file(file);
    presentation P = import_preset(text);
    bool same = export_preset(P) == text;
    out << "imported " << P.name << ": " << P.gens.size() << " generators, " << P.rules.size() << " rules"
        << (same ? ", round trip exact" : ", round trip differs") << "\n";
    return ok;
}

inline int sdet_command(const std::string &format, std::ostream &out)
{
    presentation L = presets::glhj_loc();
    polynomial s = sdet(L);
    if (format == "json") {
        nlohmann::json j{{"preset", L.name}, {"sdet", poly_to_json(s, L.order)}, {"text", print(s, L.order)}};
        out << j.dump(2) << "\n";
    } else {
        out << detail::render(s, L, format, false) << "\n";
    }
    return ok;
}

// Runs one command line (without the program name).
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Graded noncommutative rewriting over Q(j)(q)", "z3calc"};
    app.require_subcommand(1);

    std::string preset = "qjh_calculus", preset_file, qtext, format = "text", expr;
    bool unicode = false;
    auto *reduce = app.add_subcommand("reduce", "Reduce an expression to normal form");
    reduce->add_option("--preset", preset, "Preset name");
    reduce->add_option("--preset-file", preset_file, "Preset JSON file");
    reduce->add_option("--q", qtext, "Specialize q to a rational");
    reduce->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
    reduce->add_flag("--unicode", unicode, "Unicode symbols in text output");
    reduce->add_option("expr", expr, "Expression")->required();

    std::string suite;
    auto *verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", suite, "Suite name")->required();

    std::string pairs_preset;
    auto *pairs = app.add_subcommand("pairs", "Critical-pair census");
    pairs->add_option("--preset", pairs_preset, "Preset name")->required();

    auto *presets_cmd = app.add_subcommand("presets", "Preset catalog");
    presets_cmd->require_subcommand(1);
    auto *list = presets_cmd->add_subcommand("list", "List presets with rule counts");
    std::string export_name, export_file, import_file;
    auto *exp = presets_cmd->add_subcommand("export", "Write a preset as JSON");
    exp->add_option("name", export_name, "Preset name")->required();
    exp->add_option("-o,--output", export_file, "Output file");
    auto *imp = presets_cmd->add_subcommand("import", "Read and validate a preset JSON file");
    imp->add_option("file", import_file, "Preset JSON file")->required();

    std::string check;
    auto *sg = app.add_subcommand("supergroup", "Supergroup checks");
    sg->add_option("--check", check, "comodule, inverse or sdet")->required();

    std::string sdet_format = "text";
    auto *sd = app.add_subcommand("sdet", "Superdeterminant normal form");
    sd->add_option("--format", sdet_format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return bad_input;
    }

    try {
        if (*reduce) {
            return reduce_command(preset, preset_file, qtext, format, unicode, expr, out);
        }
        if (*verify) {
            return detail::emit_report(run_suite(suite), out);
        }
        if (*pairs) {
            return pairs_command(pairs_preset, out);
        }
        if (*list) {
            return presets_list(out);
        }
        if (*exp) {
            return presets_export(export_name, export_file, out);
        }
        if (*imp) {
            return presets_import(import_file, out);
        }
        if (*sg) {
            if (check == "comodule") {
                return detail::emit_report(verify_comodule(), out);
            }
            if (check == "inverse") {
                return detail::emit_report(verify_inverse(), out);
            }
            if (check == "sdet") {
                return detail::emit_report(verify_sdet(), out);
            }
            err << "error: unknown check '" << check << "' (expected comodule, inverse or sdet)\n";
            return bad_input;
        }
        if (*sd) {
            return sdet_command(sdet_format, out);
        }
    } catch (const budget_exceeded &e) {
        err << "error: " << e.what() << "\n";
        return budget;
    } catch (const parse_error &e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    } catch (const algebra_error &e) {
        err << "error: " << e.what() << "\n";
        return bad_input;
    }
    return bad_input;
}

} // namespace z3calc::cli

#endif
