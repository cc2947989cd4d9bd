#ifndef Z3CALC_REWRITE_HPP
#define Z3CALC_REWRITE_HPP

#include <z3calc/freealg.hpp>
#include <z3calc/report.hpp>

#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace z3calc
{

// Words compare by total weight, then shorter-is-larger, then lexicographically
// by precedence rank (rank 0 is the leftmost letter of normal words).
class term_order
{
public:
    term_order() = default;
    term_order(std::map<symbol, int> weights, std::vector<symbol> precedence)
        : weights_(std::move(weights)), precedence_(std::move(precedence))
    {
        compile();
    }

    const std::map<symbol, int> &weights() const
    {
        return weights_;
    }
    const std::vector<symbol> &precedence() const
    {
        return precedence_;
    }
    bool knows(symbol s) const
    {
        return s < rank_.size() && rank_[s] >= 0;
    }
    long weight(const word &w) const
    {
        long t = 0;
        for (symbol s : w) {
            t += weight_of(s);
        }
        return t;
    }
    int weight_of(symbol s) const
    {
        return s < wt_.size() ? wt_[s] : 0;
    }
    int rank(symbol s) const
    {
        return s < rank_.size() ? rank_[s] : -1;
    }

    // Three-way comparison given precomputed weights.
    int compare(long wa, const word &a, long wb, const word &b) const
    {
        if (wa != wb) {
            return wa < wb ? -1 : 1;
        }
        if (a.size() != b.size()) {
            return a.size() > b.size() ? -1 : 1;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != b[i]) {
                return rank(a[i]) < rank(b[i]) ? -1 : 1;
            }
        }
        return 0;
    }
    int compare(const word &a, const word &b) const
    {
        return compare(weight(a), a, weight(b), b);
    }
    bool less(const word &a, const word &b) const
    {
        return compare(a, b) < 0;
    }

    // Support words sorted from largest to smallest.
    std::vector<word> descending(const polynomial &p) const
    {
        std::vector<word> ws;
        for (const auto &t : p.terms()) {
            ws.push_back(t.first);
        }
        std::sort(ws.begin(), ws.end(), [this](const word &a, const word &b) { return compare(a, b) > 0; });
        return ws;
    }

    friend bool operator==(const term_order &a, const term_order &b)
    {
        return a.weights_ == b.weights_ && a.precedence_ == b.precedence_;
    }

private:
    void compile()
    {
        std::size_t n = 0;
        for (symbol s : precedence_) {
            n = std::max<std::size_t>(n, s + 1);
        }
        for (const auto &[s, w] : weights_) {
            n = std::max<std::size_t>(n, s + 1);
        }
        rank_.assign(n, -1);
        wt_.assign(n, 0);
        for (std::size_t i = 0; i < precedence_.size(); ++i) {
            rank_[precedence_[i]] = static_cast<int>(i);
        }
        for (const auto &[s, w] : weights_) {
            wt_[s] = w;
        }
    }

    std::map<symbol, int> weights_;
    std::vector<symbol> precedence_;
    std::vector<int> rank_;
    std::vector<int> wt_;
};

struct rewrite_rule {
    word lhs;
    polynomial rhs;
    std::string ref;
};

class orientation_error : public algebra_error
{
public:
    orientation_error(const word &lhs, const word &offending)
        : algebra_error("rule " + word_text(lhs) + " is not decreasing: right-hand word " + word_text(offending)
                        + " is not smaller"),
          offending_word(offending)
    {
    }
    word offending_word;
};

inline rewrite_rule orient(const word &lhs, const polynomial &rhs, const term_order &order, std::string ref = {})
{
    if (lhs.empty()) {
        throw algebra_error("rule with empty left-hand side");
    }
    for (const auto &[w, c] : rhs.terms()) {
        if (!order.less(w, lhs)) {
            throw orientation_error(lhs, w);
        }
    }
    return {lhs, rhs, std::move(ref)};
}

struct presentation {
    std::string name;
    alphabet gens;
    std::vector<rewrite_rule> rules;
    term_order order;
    std::optional<rational> q; // nullopt while q is symbolic

    const rewrite_rule *find_rule(const word &lhs) const
    {
        for (const auto &r : rules) {
            if (r.lhs == lhs) {
                return &r;
            }
        }
        return nullptr;
    }
};

class budget_exceeded : public algebra_error
{
public:
    budget_exceeded(std::size_t budget, const word &w)
        : algebra_error("step budget of " + std::to_string(budget) + " rule applications exceeded at word "
                        + word_text(w)),
          divergent_word(w)
    {
    }
    word divergent_word;
};

constexpr std::size_t default_step_budget = 1000000;

// Cap on rule applications per normal_form call; Z3CALC_STEP_BUDGET overrides.
inline std::size_t step_budget_from_env()
{
    if (const char *v = std::getenv("Z3CALC_STEP_BUDGET")) {
        char *end = nullptr;
        unsigned long long n = std::strtoull(v, &end, 10);
        if (end != v && *end == '\0' && n > 0) {
            return static_cast<std::size_t>(n);
        }
    }
    return default_step_budget;
}

class reducer
{
public:
    explicit reducer(const presentation &p, std::size_t budget = step_budget_from_env())
        : p_(std::make_shared<const presentation>(p)), budget_(budget)
    {
        index();
    }
    explicit reducer(std::shared_ptr<const presentation> p, std::size_t budget = step_budget_from_env())
        : p_(std::move(p)), budget_(budget)
    {
        index();
    }

    const presentation &pres() const
    {
        return *p_;
    }
    std::size_t budget() const
    {
        return budget_;
    }

    // Leftmost redex; among rules matching there, the shortest left-hand side.
    std::optional<std::pair<std::size_t, std::size_t>> find_redex(const word &w) const
    {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            symbol s = w[pos];
            if (s >= by_first_.size()) {
                continue;
            }
            for (std::size_t ri : by_first_[s]) {
                const word &l = p_->rules[ri].lhs;
                if (pos + l.size() > w.size()) {
                    continue;
                }
                if (std::equal(l.begin(), l.end(), w.begin() + static_cast<std::ptrdiff_t>(pos))) {
                    return std::make_pair(pos, ri);
                }
            }
        }
        return std::nullopt;
    }
    bool is_normal(const word &w) const
    {
        return !find_redex(w);
    }

    polynomial normal_form(const polynomial &p) const
    {
        const term_order &ord = p_->order;
        struct key {
            long weight;
            word w;
        };
        auto cmp = [&ord](const key &a, const key &b) { return ord.compare(a.weight, a.w, b.weight, b.w) > 0; };
        std::map<key, scalar, decltype(cmp)> work(cmp);
        auto push = [&](word w, const scalar &c) {
            long wt = ord.weight(w);
            auto [it, inserted] = work.try_emplace(key{wt, std::move(w)}, c);
            if (!inserted) {
                it->second += c;
                if (it->second.is_zero()) {
                    work.erase(it);
                }
            }
        };
        for (const auto &[w, c] : p.terms()) {
            push(w, c);
        }
        polynomial out;
        std::size_t steps = 0;
        while (!work.empty()) {
            auto it = work.begin();
            word w = it->first.w;
            scalar c = std::move(it->second);
            work.erase(it);
            auto redex = find_redex(w);
            if (!redex) {
                out.add_term(w, c);
                continue;
            }
            if (++steps > budget_) {
                throw budget_exceeded(budget_, w);
            }
            const auto &rule = p_->rules[redex->second];
            auto pos = static_cast<std::ptrdiff_t>(redex->first);
            auto after = pos + static_cast<std::ptrdiff_t>(rule.lhs.size());
            for (const auto &[rw, rc] : rule.rhs.terms()) {
                word nw;
                nw.reserve(w.size() - rule.lhs.size() + rw.size());
                nw.insert(nw.end(), w.begin(), w.begin() + pos);
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), w.begin() + after, w.end());
                push(std::move(nw), c * rc);
            }
        }
        return out;
    }

    polynomial operator()(const polynomial &p) const
    {
        return normal_form(p);
    }

private:
    void index()
    {
        std::size_t n = 0;
        for (const auto &r : p_->rules) {
            n = std::max<std::size_t>(n, r.lhs.front() + 1);
        }
        by_first_.assign(n, {});
        for (std::size_t i = 0; i < p_->rules.size(); ++i) {
            by_first_[p_->rules[i].lhs.front()].push_back(i);
        }
        for (auto &v : by_first_) {
            std::stable_sort(v.begin(), v.end(), [this](std::size_t a, std::size_t b) {
                return p_->rules[a].lhs.size() < p_->rules[b].lhs.size();
            });
        }
    }

    std::shared_ptr<const presentation> p_;
    std::size_t budget_;
    std::vector<std::vector<std::size_t>> by_first_;
};

inline polynomial normal_form(const polynomial &p, const presentation &P)
{
    return reducer(P).normal_form(p);
}

struct critical_pair {
    word overlap;
    std::size_t rule1 = 0;
    std::size_t rule2 = 0;
    polynomial branch1;
    polynomial branch2;
    bool joinable = false;
};

// Suffix/prefix overlaps (self-overlaps included) and inclusions of left-hand sides.
inline std::vector<critical_pair> critical_pairs(const reducer &red)
{
    const auto &rules = red.pres().rules;
    std::vector<critical_pair> out;
    auto emit = [&](word w, std::size_t i, std::size_t k, const polynomial &b1, const polynomial &b2) {
        critical_pair cp{std::move(w), i, k, red.normal_form(b1), red.normal_form(b2), false};
        cp.joinable = cp.branch1 == cp.branch2;
        out.push_back(std::move(cp));
    };
    for (std::size_t i = 0; i < rules.size(); ++i) {
        const word &a = rules[i].lhs;
        for (std::size_t k = 0; k < rules.size(); ++k) {
            const word &b = rules[k].lhs;
            for (std::size_t len = 1; len < std::min(a.size(), b.size()); ++len) {
                if (!std::equal(a.end() - static_cast<std::ptrdiff_t>(len), a.end(), b.begin())) {
                    continue;
                }
                word tail(b.begin() + static_cast<std::ptrdiff_t>(len), b.end());
                word head(a.begin(), a.end() - static_cast<std::ptrdiff_t>(len));
                emit(concat(a, tail), i, k, rules[i].rhs * polynomial(tail), polynomial(head) * rules[k].rhs);
            }
            if (i != k && b.size() < a.size()) {
                for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
                    if (!std::equal(b.begin(), b.end(), a.begin() + static_cast<std::ptrdiff_t>(pos))) {
                        continue;
                    }
                    word head(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(pos));
                    word tail(a.begin() + static_cast<std::ptrdiff_t>(pos + b.size()), a.end());
                    emit(a, i, k, rules[i].rhs, polynomial(head) * rules[k].rhs * polynomial(tail));
                }
            }
        }
    }
    return out;
}

inline std::vector<critical_pair> critical_pairs(const presentation &P)
{
    return critical_pairs(reducer(P));
}

inline report check_termination(const presentation &P)
{
    report r{"termination", {}};
    for (const auto &g : P.gens.generators()) {
        symbol s = sym(g.name);
        if (!P.order.knows(s)) {
            r.add("order covers " + g.name, false, g.name + " has no precedence rank");
        } else if (P.order.weight_of(s) <= 0) {
            r.add("non-positive weight " + g.name + " (well-foundedness unproven, step budget guards)", true,
                  "weight " + std::to_string(P.order.weight_of(s)));
        }
    }
    for (const auto &rule : P.rules) {
        std::optional<std::string> bad;
        for (const auto &[w, c] : rule.rhs.terms()) {
            if (!P.order.less(w, rule.lhs)) {
                bad = word_text(w);
                break;
            }
        }
        r.add("decreasing " + word_text(rule.lhs), !bad, bad);
    }
    return r;
}

inline report check_homogeneity(const presentation &P)
{
    report r{"homogeneity", {}};
    for (const auto &rule : P.rules) {
        int g = P.gens.grade(rule.lhs);
        std::optional<std::string> bad;
        for (const auto &[w, c] : rule.rhs.terms()) {
            if (P.gens.grade(w) != g) {
                bad = word_text(w) + " has grade " + std::to_string(P.gens.grade(w)) + ", expected "
                      + std::to_string(g);
                break;
            }
        }
        r.add("homogeneous " + word_text(rule.lhs), !bad, bad);
    }
    return r;
}

// Every symbol used by a rule or a d-image belongs to the alphabet.
inline report check_alphabet(const presentation &P)
{
    report r{"alphabet", {}};
    for (const auto &rule : P.rules) {
        std::optional<std::string> bad;
        auto scan = [&](const word &w) {
            for (symbol s : w) {
                if (!P.gens.contains(s)) {
                    bad = sym_name(s);
                }
            }
        };
        scan(rule.lhs);
        for (const auto &t : rule.rhs.terms()) {
            scan(t.first);
        }
        if (bad) {
            r.add("closed " + word_text(rule.lhs), false, "unknown generator " + *bad);
        }
    }
    for (const auto &g : P.gens.generators()) {
        if (g.d_image && *g.d_image != "zero" && !P.gens.contains(sym(*g.d_image))) {
            r.add("d-closed " + g.name, false, "d-image " + *g.d_image + " not in alphabet");
        }
    }
    return r;
}

inline report validate(const presentation &P)
{
    report r{P.name, {}};
    r.append(check_alphabet(P));
    r.append(check_homogeneity(P));
    r.append(check_termination(P));
    return r;
}

} // namespace z3calc

#endif
