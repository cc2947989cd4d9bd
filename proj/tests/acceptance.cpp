// One line per acceptance criterion: "Cnn PASS|FAIL title (checks, time)".
// With arguments, runs only the named criteria (c01 .. c11); exit 0 iff all ran criteria pass.
#include <z3calc/cli.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace z3calc;

namespace
{

constexpr double time_limit_s = 10.0;

struct criterion {
    std::string id;
    std::string title;
    std::function<report()> run;
};

report merged(const std::string &name, std::initializer_list<std::function<report()>> parts)
{
    report r{name, {}};
    for (const auto &p : parts) {
        report s = p();
        r.append(s, s.suite + ": ");
    }
    return r;
}

report cli_contract()
{
    report r{"cli", {}};
    auto expect = [&](std::vector<std::string> args, int code, const std::string &out) {
        std::ostringstream o, e;
        int got = cli::run(args, o, e);
        std::string line;
        for (const auto &a : args) {
            line += (line.empty() ? "" : " ") + a;
        }
        bool ok = got == code && (out.empty() || o.str() == out);
        std::string wit = "exit " + std::to_string(got);
        if (!out.empty()) {
            wit += ", output " + o.str();
        }
        r.add(line, ok, ok ? std::nullopt : std::optional<std::string>(wit));
    };
    expect({"reduce", "--preset", "h_plane", "x*th"}, cli::ok, "th*x + h*x*x\n");
    expect({"reduce", "--preset", "qjh_calculus", "--q", "1", "th*dx"}, cli::ok, "j*dx*th - j^2*h*dx*x\n");
    expect({"verify", "--suite", "all"}, cli::ok, "");
    return r;
}

const std::vector<criterion> &criteria()
{
    static const std::vector<criterion> c{
        {"c01", "preset integrity", verify_presets},
        {"c02", "confluence census", [] { return census(); }},
        {"c03", "contraction replay", verify_contraction},
        {"c04", "differential tower",
         [] { return merged("c04", {[] { return replay_tower(); }, [] { return replay_iterated_leibniz(); }}); }},
        {"c05", "relation replays",
         [] { return merged("c05", {replay_thm3_2, replay_thm3_4, replay_lemma3_5, replay_cor3_6}); }},
        {"c06", "q -> 1 specialization", verify_specialization},
        {"c07", "partial-derivative identities", [] { return merged("c07", {replay_partials, replay_weyl}); }},
        {"c08", "Cartan-Maurer forms", cartan_verify},
        {"c09", "supergroup comodule", [] { return merged("c09", {verify_comodule, dual_variant_oracle}); }},
        {"c10", "inverse and superdeterminant", [] { return merged("c10", {verify_inverse, verify_sdet}); }},
        {"c11", "CLI contract", cli_contract},
    };
    return c;
}

bool run_one(const criterion &c, bool verbose)
{
    auto t0 = std::chrono::steady_clock::now();
    report r;
    std::string error;
    try {
        r = c.run();
    } catch (const std::exception &e) {
        error = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::size_t failed = r.failures();
    bool pass = error.empty() && failed == 0 && secs < time_limit_s;
    std::cout << std::uppercase << c.id << std::nouppercase << " " << (pass ? "PASS" : "FAIL") << " " << c.title
              << " (" << r.checks.size() - failed << "/" << r.checks.size() << " checks, " << std::fixed
              << std::setprecision(2) << secs << " s)\n";
    if (!error.empty()) {
        std::cout << "    error: " << error << "\n";
    }
    if (secs >= time_limit_s) {
        std::cout << "    exceeded " << time_limit_s << " s\n";
    }
    for (const auto &ch : r.checks) {
        if (!ch.pass || verbose) {
            std::cout << "    " << (ch.pass ? "ok   " : "fail ") << ch.name;
            if (ch.witness && !ch.pass) {
                std::string w = *ch.witness;
                std::cout << ": " << (w.size() > 300 ? w.substr(0, 300) + " ..." : w);
            }
            std::cout << "\n";
        }
    }
    return pass;
}

} // namespace

int main(int argc, char **argv)
{
    std::vector<std::string> wanted;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "-v" || a == "--verbose") {
            verbose = true;
        } else {
            wanted.push_back(a);
        }
    }
    bool all = true;
    std::size_t ran = 0;
    for (const auto &c : criteria()) {
        if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.id) == wanted.end()) {
            continue;
        }
        ++ran;
        all = run_one(c, verbose) && all;
    }
    if (ran == 0) {
        std::cerr << "no criterion matched; expected c01 .. c11\n";
        return 2;
    }
    return all ? 0 : 1;
}
