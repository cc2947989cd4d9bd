#ifndef Z3CALC_REPORT_HPP
#define Z3CALC_REPORT_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace z3calc
{

struct check {
    std::string name;
    bool pass = false;
    std::optional<std::string> witness;
};

struct report {
    std::string suite;
    std::vector<check> checks;

    void add(std::string name, bool pass, std::optional<std::string> witness = std::nullopt)
    {
        checks.push_back({std::move(name), pass, std::move(witness)});
    }
    void append(const report &other, const std::string &prefix = {})
    {
        for (const auto &c : other.checks) {
            checks.push_back({prefix + c.name, c.pass, c.witness});
        }
    }
    bool passed() const
    {
        for (const auto &c : checks) {
            if (!c.pass) {
                return false;
            }
        }
        return true;
    }
    std::size_t failures() const
    {
        std::size_t n = 0;
        for (const auto &c : checks) {
            n += c.pass ? 0 : 1;
        }
        return n;
    }
    const check *find(const std::string &name) const
    {
        for (const auto &c : checks) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }
};

inline nlohmann::json to_json(const report &r)
{
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &c : r.checks) {
        nlohmann::json j{{"name", c.name}, {"status", c.pass ? "pass" : "fail"}};
        if (c.witness) {
            j["witness"] = *c.witness;
        }
        checks.push_back(std::move(j));
    }
    return {{"suite", r.suite}, {"checks", std::move(checks)}};
}

} // namespace z3calc

#endif
