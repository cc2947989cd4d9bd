#ifndef Z3CALC_SUITES_HPP
#define Z3CALC_SUITES_HPP

#include <z3calc/calculus.hpp>
#include <z3calc/preset_json.hpp>
#include <z3calc/supergroup.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace z3calc
{

class unknown_suite : public algebra_error
{
public:
    explicit unknown_suite(const std::string &name) : algebra_error("unknown suite '" + name + "'") {}
};

// Homogeneity, termination and d-closure of every shipped preset, plus a JSON round trip.
inline report verify_presets()
{
    report rep{"presets", {}};
    for (const auto &n : presets::names()) {
        presentation P = build(n);
        rep.append(validate(P), n + ": ");
        std::string text = export_preset(P);
        std::string again = export_preset(import_preset(text));
        rep.add(n + ": JSON round trip is byte-identical", text == again);
    }
    return rep;
}

inline report census(const std::vector<std::string> &names = {"h_plane", "hj_calculus", "qjh_calculus"})
{
    report rep{"census", {}};
    for (const auto &n : names) {
        presentation P = build(n);
        auto pairs = critical_pairs(P);
        std::size_t bad = 0;
        std::string wit;
        for (const auto &cp : pairs) {
            if (cp.joinable) {
                continue;
            }
            ++bad;
            if (bad <= 3) {
                wit += (wit.empty() ? "" : "; ") + word_text(cp.overlap) + ": "
                       + print(cp.branch1 - cp.branch2, P.order);
            }
        }
        rep.add(n + ": " + std::to_string(pairs.size()) + " critical pairs, all joinable", bad == 0,
                bad == 0 ? std::nullopt : std::optional<std::string>(std::to_string(bad) + " non-joinable; " + wit));
        if (n == "qjh_calculus") {
            rep.add("qjh_calculus has more than 50 critical pairs", pairs.size() > 50, std::to_string(pairs.size()));
        }
    }
    return rep;
}

using suite_fn = std::function<report()>;

// Suites in a fixed order; "all" runs each of them.
inline const std::vector<std::pair<std::string, suite_fn>> &suite_registry()
{
    static const std::vector<std::pair<std::string, suite_fn>> r{
        {"presets", verify_presets},
        {"census", [] { return census(); }},
        {"contraction", verify_contraction},
        {"thm3_2", replay_thm3_2},
        {"thm3_4", replay_thm3_4},
        {"lemma3_5", replay_lemma3_5},
        {"cor3_6", replay_cor3_6},
        {"iterated_leibniz", [] { return replay_iterated_leibniz(); }},
        {"tower", [] { return replay_tower(); }},
        {"partials", replay_partials},
        {"weyl", replay_weyl},
        {"cartan", cartan_verify},
        {"specialization", verify_specialization},
        {"comodule", verify_comodule},
        {"dual_variant", dual_variant_oracle},
        {"inverse", verify_inverse},
        {"sdet", verify_sdet},
    };
    return r;
}

inline std::vector<std::string> suite_names()
{
    std::vector<std::string> n;
    for (const auto &[name, fn] : suite_registry()) {
        n.push_back(name);
    }
    n.push_back("all");
    return n;
}

inline report run_suite(const std::string &name)
{
    if (name == "all") {
        report all{"all", {}};
        for (const auto &[n, fn] : suite_registry()) {
            all.append(fn(), n + ": ");
        }
        return all;
    }
    for (const auto &[n, fn] : suite_registry()) {
        if (n == name) {
            return fn();
        }
    }
    throw unknown_suite(name);
}

} // namespace z3calc

#endif
