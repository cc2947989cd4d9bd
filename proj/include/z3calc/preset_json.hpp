#ifndef Z3CALC_PRESET_JSON_HPP
#define Z3CALC_PRESET_JSON_HPP

#include <z3calc/presets.hpp>

#include <json.hpp>

#include <string>

namespace z3calc
{

inline nlohmann::json word_to_json(const word &w)
{
    nlohmann::json a = nlohmann::json::array();
    for (symbol s : w) {
        a.push_back(sym_name(s));
    }
    return a;
}

inline word word_from_json(const nlohmann::json &a)
{
    word w;
    for (const auto &n : a) {
        w.push_back(sym(n.get<std::string>()));
    }
    return w;
}

// Generator "weight" is the effective commutation weight; term-order weights live under "order".
inline nlohmann::json to_json(const presentation &P)
{
    nlohmann::json gens = nlohmann::json::array();
    for (const auto &g : P.gens.generators()) {
        nlohmann::json j{{"name", g.name}, {"grade", g.grade}, {"weight", g.omega}};
        if (g.nilpotency) {
            j["nilpotency"] = *g.nilpotency;
        }
        if (g.d_image) {
            j["d_image"] = *g.d_image;
        }
        if (g.d_passage) {
            j["d_passage"] = to_string(*g.d_passage);
        }
        gens.push_back(std::move(j));
    }
    nlohmann::json rules = nlohmann::json::array();
    for (const auto &r : P.rules) {
        rules.push_back({{"lhs", word_to_json(r.lhs)}, {"rhs", poly_to_json(r.rhs, P.order)}, {"ref", r.ref}});
    }
    nlohmann::json weights = nlohmann::json::object();
    for (const auto &[s, w] : P.order.weights()) {
        weights[sym_name(s)] = w;
    }
    nlohmann::json precedence = nlohmann::json::array();
    for (symbol s : P.order.precedence()) {
        precedence.push_back(sym_name(s));
    }
    nlohmann::json q = P.q ? nlohmann::json(P.q->get_str()) : nlohmann::json("symbolic");
    return {{"name", P.name},
            {"generators", std::move(gens)},
            {"rules", std::move(rules)},
            {"order", {{"weights", std::move(weights)}, {"precedence", std::move(precedence)}}},
            {"q", std::move(q)}};
}

inline std::string export_preset(const presentation &P)
{
    return to_json(P).dump(2) + "\n";
}

// Rebuilds a presentation; rules are re-oriented and the result validated.
inline presentation presentation_from_json(const nlohmann::json &j)
{
    presentation P;
    try {
        P.name = j.at("name").get<std::string>();
        for (const auto &g : j.at("generators")) {
            generator_info info;
            info.name = g.at("name").get<std::string>();
            info.grade = g.at("grade").get<int>();
            info.omega = g.at("weight").get<int>();
            if (g.contains("nilpotency")) {
                info.nilpotency = g["nilpotency"].get<int>();
            }
            if (g.contains("d_image")) {
                info.d_image = g["d_image"].get<std::string>();
            }
            if (g.contains("d_passage")) {
                info.d_passage = parse_scalar(g["d_passage"].get<std::string>());
            }
            P.gens.add(std::move(info));
        }
        std::map<symbol, int> weights;
        for (const auto &[name, w] : j.at("order").at("weights").items()) {
            weights[sym(name)] = w.get<int>();
        }
        std::vector<symbol> precedence;
        for (const auto &n : j.at("order").at("precedence")) {
            precedence.push_back(sym(n.get<std::string>()));
        }
        P.order = term_order(std::move(weights), std::move(precedence));
        for (const auto &r : j.at("rules")) {
            P.rules.push_back(orient(word_from_json(r.at("lhs")), poly_from_json(r.at("rhs")), P.order,
                                     r.value("ref", std::string())));
        }
        const auto &q = j.at("q");
        if (q.get<std::string>() != "symbolic") {
            P.q = rational(q.get<std::string>());
            P.q->canonicalize();
        }
    } catch (const nlohmann::json::exception &e) {
        throw preset_error(std::string("malformed preset JSON: ") + e.what());
    } catch (const std::invalid_argument &e) {
        throw preset_error(std::string("malformed preset JSON: ") + e.what());
    }
    report v = validate(P);
    if (!v.passed()) {
        for (const auto &c : v.checks) {
            if (!c.pass) {
                throw preset_error("imported preset fails " + c.name + (c.witness ? ": " + *c.witness : ""));
            }
        }
    }
    return P;
}

inline presentation import_preset(const std::string &text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw preset_error(std::string("invalid JSON: ") + e.what());
    }
    return presentation_from_json(j);
}

} // namespace z3calc

#endif
