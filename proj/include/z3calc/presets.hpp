#ifndef Z3CALC_PRESETS_HPP
#define Z3CALC_PRESETS_HPP

#include <z3calc/parser.hpp>
#include <z3calc/rewrite.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

namespace z3calc
{

class unknown_preset : public algebra_error
{
public:
    explicit unknown_preset(const std::string &name) : algebra_error("unknown preset '" + name + "'") {}
};

class preset_error : public algebra_error
{
public:
    using algebra_error::algebra_error;
};

// Assembles a presentation from text-syntax relations.
class preset_builder
{
public:
    explicit preset_builder(std::string name)
    {
        p_.name = std::move(name);
    }
    explicit preset_builder(presentation base, std::string name) : p_(std::move(base))
    {
        p_.name = std::move(name);
        for (const auto &[s, w] : p_.order.weights()) {
            weights_[s] = w;
        }
        precedence_ = p_.order.precedence();
    }

    // The d-passage factor is j^omega for every generator.
    preset_builder &gen(const std::string &name, int grade, int omega, int weight,
                        std::optional<int> nilpotency = std::nullopt,
                        std::optional<std::string> d_image = std::nullopt)
    {
        p_.gens.add({name, grade, omega, nilpotency, std::move(d_image), scalar::j().pow(omega)});
        weights_[sym(name)] = weight;
        return *this;
    }
    // Smallest first; replaces any previous precedence.
    preset_builder &precedence(const std::vector<std::string> &names)
    {
        precedence_.clear();
        for (const auto &n : names) {
            precedence_.push_back(sym(n));
        }
        sync_order();
        return *this;
    }
    preset_builder &weight(const std::string &name, int w)
    {
        weights_[sym(name)] = w;
        sync_order();
        return *this;
    }
    preset_builder &rule(const std::string &lhs, const std::string &rhs, const std::string &ref)
    {
        sync_order();
        auto names = generator_names(p_.gens);
        polynomial l = parse_poly(lhs, names);
        if (l.size() != 1 || !l.coeff(l.terms().begin()->first).is_one()) {
            throw preset_error("rule left-hand side must be a single word: " + lhs);
        }
        p_.rules.push_back(orient(l.terms().begin()->first, parse_poly(rhs, names), p_.order, ref));
        return *this;
    }
    preset_builder &raw_rule(rewrite_rule r)
    {
        p_.rules.push_back(std::move(r));
        return *this;
    }
    presentation &current()
    {
        sync_order();
        return p_;
    }
    presentation build()
    {
        sync_order();
        return p_;
    }

private:
    void sync_order()
    {
        p_.order = term_order(weights_, precedence_);
    }

    presentation p_;
    std::map<symbol, int> weights_;
    std::vector<symbol> precedence_;
};

namespace detail
{

inline void plane_generators(preset_builder &b, bool with_d = false)
{
    auto img = [&](const char *n) { return with_d ? std::optional<std::string>(n) : std::nullopt; };
    b.gen("h", 2, 1, 1, 3, img("zero")).gen("th", 1, 1, 2, 3, img("dth")).gen("x", 0, 0, 1, std::nullopt, img("dx"));
}

inline void calculus_generators(preset_builder &b)
{
    plane_generators(b, true);
    b.gen("dx", 1, 1, 1, std::nullopt, "d2x")
        .gen("dth", 2, 2, 4, std::nullopt, "d2th")
        .gen("d2x", 2, 2, 1, std::nullopt, "zero")
        .gen("d2th", 0, 0, 4, std::nullopt, "zero")
        .precedence({"h", "d2th", "d2x", "dth", "dx", "th", "x"});
}

inline void calculus_rules(preset_builder &b, bool symbolic_q)
{
    std::string q = symbolic_q ? "q" : "1";
    std::string qi = symbolic_q ? "q^-1" : "1";
    b.rule("x*th", q + "*th*x + h*x*x", "plane")
        .rule("th*th*th", "0", "plane nilpotency")
        .rule("h*h*h", "0", "h nilpotency")
        .rule("x*h", "h*x", "h passage")
        .rule("th*h", q + "*j*h*th", "h passage")
        .rule("dx*h", "j*h*dx", "h passage, differentials")
        .rule("dth*h", q + "*j^2*h*dth", "h passage, differentials")
        .rule("d2x*h", "j^2*h*d2x", "h passage, second differentials")
        .rule("d2th*h", q + "*h*d2th", "h passage, second differentials")
        .rule("x*dx", "j^2*dx*x", "coordinates and differentials")
        .rule("x*dth", q + "*dth*x + (j^2 - 1)*dx*th + j*h*dx*x", "coordinates and differentials")
        .rule("th*dx", "j*" + qi + "*dx*th - " + qi + "*j^2*h*dx*x", "coordinates and differentials")
        .rule("th*dth", "j*dth*th", "coordinates and differentials")
        .rule("x*d2x", "j^2*d2x*x", "coordinates and second differentials")
        .rule("x*d2th", q + "*d2th*x + (j^2 - 1)*d2x*th + j^2*h*d2x*x", "coordinates and second differentials")
        .rule("th*d2x", qi + "*d2x*th - " + qi + "*j^2*h*d2x*x", "coordinates and second differentials")
        .rule("th*d2th", "d2th*th", "coordinates and second differentials")
        .rule("dx*dth", q + "*j*dth*dx + j^2*h*dx*dx", "first differentials")
        .rule("dx*d2x", "j*d2x*dx", "first and second differentials")
        .rule("dx*d2th", q + "*d2th*dx + (j - j^2)*d2x*dth + j^2*h*d2x*dx", "first and second differentials")
        .rule("dth*d2x", qi + "*j^2*d2x*dth - " + qi + "*j^2*h*d2x*dx", "first and second differentials")
        .rule("dth*d2th", "d2th*dth", "first and second differentials")
        .rule("d2x*d2th", q + "*j^2*d2th*d2x + j*h*d2x*d2x", "second differentials")
        .rule("dx*dx*dx", "0", "differential nilpotency");
}

inline presentation make_calculus(const std::string &name, bool symbolic_q)
{
    preset_builder b(name);
    calculus_generators(b);
    calculus_rules(b, symbolic_q);
    presentation p = b.build();
    if (!symbolic_q) {
        p.q = rational(1);
    }
    return p;
}

struct swap_relation {
    word lhs;
    word swapped;
    scalar c;
    polynomial rest;
    bool x_first; // lhs is x*g rather than g*x
};

// A rule x*g -> c*g*x + L or g*x -> c*x*g + L with g distinct from x and x^-1.
inline std::optional<swap_relation> as_swap(const rewrite_rule &r, symbol x, symbol xinv)
{
    if (r.lhs.size() != 2) {
        return std::nullopt;
    }
    bool x_first = r.lhs[0] == x;
    bool x_second = r.lhs[1] == x;
    if (x_first == x_second) {
        return std::nullopt;
    }
    symbol g = x_first ? r.lhs[1] : r.lhs[0];
    if (g == xinv) {
        return std::nullopt;
    }
    word swapped{r.lhs[1], r.lhs[0]};
    scalar c = r.rhs.coeff(swapped);
    if (c.is_zero()) {
        return std::nullopt;
    }
    polynomial rest = r.rhs - polynomial(swapped, c);
    return swap_relation{r.lhs, swapped, c, rest, x_first};
}

} // namespace detail

// Adjoins x^-1 (already in the alphabet and order) with cancellation rules and
// passage rules obtained by conjugating each x-swap relation with x^-1, iterated
// to a fixed point. The report records the multiply-back check of every derived rule.
inline report localize(presentation &P, const std::string &xname, const std::string &xinvname,
                       const std::vector<std::string> &skip = {})
{
    symbol x = sym(xname);
    symbol xi = sym(xinvname);
    report rep{"localize " + xname, {}};
    std::vector<detail::swap_relation> sources;
    for (const auto &r : P.rules) {
        auto s = detail::as_swap(r, x, xi);
        if (!s) {
            continue;
        }
        symbol g = s->x_first ? s->lhs[1] : s->lhs[0];
        if (std::find(skip.begin(), skip.end(), sym_name(g)) == skip.end()) {
            sources.push_back(*s);
        }
    }
    P.rules.push_back({word{x, xi}, polynomial(1), "cancellation"});
    P.rules.push_back({word{xi, x}, polynomial(1), "cancellation"});
    std::size_t base = P.rules.size();
    polynomial X(word{x});
    polynomial XI(word{xi});

    // Each source yields xi*g = alpha*g*xi + beta*(xi*L*xi).
    struct derived {
        symbol g;
        scalar alpha;
        scalar beta;
        polynomial rest;
    };
    std::vector<derived> ds;
    for (const auto &s : sources) {
        symbol g = s.x_first ? s.lhs[1] : s.lhs[0];
        if (s.x_first) {
            ds.push_back({g, s.c.inverse(), -s.c.inverse(), s.rest});
        } else {
            ds.push_back({g, s.c, scalar(1), s.rest});
        }
    }
    auto make_rule = [&](const derived &d, const polynomial &correction) {
        word a{xi, d.g};
        word b{d.g, xi};
        polynomial tail = d.beta * correction;
        if (P.order.compare(a, b) > 0) {
            return rewrite_rule{a, polynomial(b, d.alpha) + tail, "derived inverse passage"};
        }
        scalar ai = d.alpha.inverse();
        return rewrite_rule{b, polynomial(a, ai) - ai * tail, "derived inverse passage"};
    };
    for (const auto &d : ds) {
        P.rules.push_back(make_rule(d, polynomial()));
    }
    constexpr int max_rounds = 32;
    bool stable = false;
    for (int round = 0; round < max_rounds && !stable; ++round) {
        reducer red(P);
        std::vector<rewrite_rule> next;
        for (const auto &d : ds) {
            next.push_back(make_rule(d, red.normal_form(XI * d.rest * XI)));
        }
        stable = true;
        for (std::size_t i = 0; i < ds.size(); ++i) {
            auto &cur = P.rules[base + i];
            if (cur.lhs != next[i].lhs || cur.rhs != next[i].rhs) {
                cur = next[i];
                stable = false;
            }
        }
    }
    rep.add("fixed point reached", stable);
    reducer red(P);
    for (std::size_t i = 0; i < ds.size(); ++i) {
        const auto &r = P.rules[base + i];
        polynomial g(word{ds[i].g});
        bool xi_first = r.lhs[0] == xi;
        polynomial back = xi_first ? red.normal_form(X * r.rhs) : red.normal_form(r.rhs * X);
        polynomial expect = red.normal_form(g);
        rep.add("multiply back " + word_text(r.lhs), back == expect,
                back == expect ? std::nullopt : std::optional<std::string>(print(back - expect, P.order)));
    }
    return rep;
}

namespace presets
{

inline presentation q_plane()
{
    preset_builder b("q_plane");
    b.gen("th", 1, 1, 1, 3).gen("x", 0, 0, 1).precedence({"th", "x"});
    b.rule("x*th", "q*th*x", "q-plane").rule("th*th*th", "0", "q-plane nilpotency");
    return b.build();
}

inline presentation h_plane()
{
    preset_builder b("h_plane");
    detail::plane_generators(b);
    b.precedence({"h", "th", "x"});
    b.rule("x*th", "th*x + h*x*x", "h-plane")
        .rule("th*th*th", "0", "h-plane nilpotency")
        .rule("h*h*h", "0", "h nilpotency");
    presentation p = b.build();
    p.q = rational(1);
    return p;
}

inline presentation qjh_calculus()
{
    return detail::make_calculus("qjh_calculus", true);
}

// Transcribed independently from the q = 1 relation lists.
inline presentation hj_calculus()
{
    preset_builder b("hj_calculus");
    detail::calculus_generators(b);
    b.rule("x*th", "th*x + h*x*x", "h-plane")
        .rule("th*th*th", "0", "h-plane nilpotency")
        .rule("h*h*h", "0", "h nilpotency")
        .rule("x*h", "h*x", "h passage")
        .rule("th*h", "j*h*th", "h passage")
        .rule("dx*h", "j*h*dx", "h passage, differentials")
        .rule("dth*h", "j^2*h*dth", "h passage, differentials")
        .rule("d2x*h", "j^2*h*d2x", "h passage, second differentials")
        .rule("d2th*h", "h*d2th", "h passage, second differentials")
        .rule("x*dx", "j^2*dx*x", "coordinates and differentials, q = 1")
        .rule("x*dth", "dth*x + (j^2 - 1)*dx*th + h*j*dx*x", "coordinates and differentials, q = 1")
        .rule("th*dx", "j*dx*th - h*j^2*dx*x", "coordinates and differentials, q = 1")
        .rule("th*dth", "j*dth*th", "coordinates and differentials, q = 1")
        .rule("x*d2x", "j^2*d2x*x", "coordinates and second differentials, q = 1")
        .rule("x*d2th", "d2th*x + (j^2 - 1)*d2x*th + h*j^2*d2x*x", "coordinates and second differentials, q = 1")
        .rule("th*d2x", "d2x*th - h*j^2*d2x*x", "coordinates and second differentials, q = 1")
        .rule("th*d2th", "d2th*th", "coordinates and second differentials, q = 1")
        .rule("dx*dth", "j*dth*dx + h*j^2*dx*dx", "first differentials, q = 1")
        .rule("dx*d2x", "j*d2x*dx", "first and second differentials, q = 1")
        .rule("dx*d2th", "d2th*dx + (j - j^2)*d2x*dth + h*j^2*d2x*dx", "first and second differentials, q = 1")
        .rule("dth*d2x", "j^2*d2x*dth - h*j^2*d2x*dx", "first and second differentials, q = 1")
        .rule("dth*d2th", "d2th*dth", "first and second differentials, q = 1")
        .rule("d2x*d2th", "j^2*d2th*d2x + j*h*d2x*d2x", "second differentials, q = 1")
        .rule("dx*dx*dx", "0", "differential nilpotency");
    presentation p = b.build();
    p.q = rational(1);
    return p;
}

inline presentation weyl()
{
    preset_builder b("weyl");
    detail::plane_generators(b);
    b.gen("pth", 2, 2, 1).gen("px", 0, 0, 2).precedence({"h", "th", "x", "pth", "px"});
    b.rule("x*th", "th*x + h*x*x", "h-plane")
        .rule("th*th*th", "0", "h-plane nilpotency")
        .rule("h*h*h", "0", "h nilpotency")
        .rule("x*h", "h*x", "h passage")
        .rule("th*h", "j*h*th", "h passage")
        .rule("px*x", "1 + j^2*x*px + (j^2 - 1)*th*pth + h*x*pth", "weyl")
        .rule("pth*x", "x*pth", "weyl")
        .rule("px*th", "j^2*(th - h*x)*px", "weyl")
        .rule("pth*th", "1 + j^2*th*pth", "weyl")
        .rule("px*pth", "j*pth*px", "weyl")
        .rule("pth*pth*pth", "0", "weyl nilpotency")
        .rule("px*h", "h*px", "derived h passage, partials")
        .rule("pth*h", "j^2*h*pth", "derived h passage, partials");
    presentation p = b.build();
    p.q = rational(1);
    return p;
}

inline presentation cartan(report *derivation = nullptr)
{
    preset_builder b(qjh_calculus(), "cartan");
    b.gen("xinv", 0, 0, 1).gen("w", 1, 1, 2).gen("u", 2, 2, 3);
    b.precedence({"h", "d2th", "d2x", "dth", "dx", "w", "u", "th", "xinv", "x"});
    b.rule("u*h", "q*j^2*h*u", "cartan-maurer h passage")
        .rule("w*h", "j*h*w", "cartan-maurer h passage")
        .rule("x*w", "j^2*w*x", "coordinates and cartan-maurer forms")
        .rule("x*u", "q*u*x", "coordinates and cartan-maurer forms")
        .rule("th*w", "j*w*th", "coordinates and cartan-maurer forms")
        .rule("th*u", "q*j*u*th + q*h*u*x", "coordinates and cartan-maurer forms")
        .rule("w*dx", "j*dx*w", "cartan-maurer forms and differentials")
        .rule("u*dx", "q^-1*dx*u", "cartan-maurer forms and differentials")
        .rule("w*dth", "j*dth*w + (1 - j)*th*xinv*dx*w", "cartan-maurer forms and differentials")
        .rule("u*dth", "q^-1*dth*u + q^-1*((1 - j)*th*xinv - h)*dx*u", "cartan-maurer forms and differentials")
        .rule("w*d2x", "j^2*d2x*w", "cartan-maurer forms and second differentials")
        .rule("u*d2x", "q^-1*d2x*u", "cartan-maurer forms and second differentials")
        .rule("w*d2th", "(j - j^2)*q^-1*d2x*u + d2th*w", "cartan-maurer forms and second differentials")
        .rule("u*d2th", "q^-1*d2th*u + ((j - j^2)*xinv*th - q^-1*j^2*h)*d2x*u",
              "cartan-maurer forms and second differentials")
        .rule("u*w", "w*u", "cartan-maurer forms")
        .rule("w*w*w", "0", "cartan-maurer nilpotency");
    presentation p = b.build();
    report r = localize(p, "x", "xinv");
    if (derivation != nullptr) {
        *derivation = r;
    }
    return p;
}

namespace detail
{

inline void gl_generators(preset_builder &b)
{
    b.gen("h", 2, 1, 1, 3, "zero")
        .gen("g", 1, 1, 3)
        .gen("b", 2, 2, 1, 3)
        .gen("dT", 0, 0, 2)
        .gen("a", 0, 0, 2)
        .precedence({"h", "g", "b", "dT", "a"});
}

inline void gl_rules(preset_builder &b)
{
    b.rule("a*b", "j*b*a", "supermatrix")
        .rule("a*g", "g*a + h*(a*a - a*dT + g*b + j^2*h*a*b)", "supermatrix")
        .rule("dT*b", "j*b*dT + j*h*b*b", "supermatrix")
        .rule("dT*g", "g*dT", "supermatrix")
        .rule("b*b*b", "0", "supermatrix nilpotency")
        .rule("g*g*g", "-h*j*((j - 1)*g*g*dT + 2*j*h*g*dT*dT)", "supermatrix nilpotency")
        .rule("b*g", "g*b + h*a*b", "supermatrix")
        .rule("a*dT", "dT*a + (1 - j)*b*g + h*b*a", "supermatrix")
        .rule("a*h", "h*a", "h passage, supermatrix")
        .rule("dT*h", "h*dT", "h passage, supermatrix")
        .rule("b*h", "j^2*h*b", "h passage, supermatrix")
        .rule("g*h", "j*h*g", "h passage, supermatrix")
        .rule("h*h*h", "0", "h nilpotency");
}

// Plane (or dual plane) symbols commute past matrix entries with j^(omega*omega).
inline void cross_rules(preset_builder &b, const std::vector<std::string> &plane, const alphabet &a)
{
    for (const auto &z : plane) {
        for (const char *t : {"a", "b", "g", "dT"}) {
            int e = a.info(sym(z)).omega * a.info(sym(t)).omega;
            b.rule(z + "*" + t, "j^" + std::to_string(e % 3) + "*" + t + "*" + z, "plane and supermatrix");
        }
    }
}

} // namespace detail

// Entry grades follow the supermatrix layout; the order keeps every relation decreasing.
inline presentation glhj()
{
    preset_builder b("glhj");
    detail::gl_generators(b);
    detail::gl_rules(b);
    presentation p = b.build();
    p.q = rational(1);
    return p;
}

// Inverses of a and dT pass the original entries only. Inverse weights must be
// negative: a^-1 g -> h a and a^-1 dT -> a^-1 b g a^-1 cannot both decrease otherwise.
inline presentation glhj_loc(report *derivation = nullptr)
{
    preset_builder b("glhj_loc");
    b.gen("h", 2, 1, 1, 3, "zero")
        .gen("g", 1, 1, 4)
        .gen("b", 2, 2, 1, 3)
        .gen("dT", 0, 0, 3)
        .gen("a", 0, 0, 3)
        .gen("dTinv", 0, 0, -2)
        .gen("ainv", 0, 0, -2)
        .precedence({"h", "g", "b", "dT", "a", "dTinv", "ainv"});
    detail::gl_rules(b);
    presentation p = b.build();
    p.q = rational(1);
    report r1 = localize(p, "dT", "dTinv");
    report r2 = localize(p, "a", "ainv", {"dTinv"});
    if (derivation != nullptr) {
        *derivation = report{"glhj_loc localization", {}};
        derivation->append(r1, "dT: ");
        derivation->append(r2, "a: ");
    }
    return p;
}

// Dual-plane grades (phi, y) = (1, 2): the variant selected by the dual coaction oracle.
inline presentation dual_plane()
{
    preset_builder b("dual_plane");
    b.gen("h", 2, 1, 1, 3, "zero").gen("y", 2, 2, 2).gen("phi", 1, 1, 1, 3).precedence({"h", "y", "phi"});
    b.rule("phi*y", "j*y*phi + h*j^2*phi*phi", "dual h-plane")
        .rule("phi*phi*phi", "0", "dual h-plane nilpotency")
        .rule("h*h*h", "0", "h nilpotency");
    presentation p = b.build();
    p.q = rational(1);
    return p;
}

inline presentation coaction_plane()
{
    preset_builder b("coaction_plane");
    detail::gl_generators(b);
    b.gen("th", 1, 1, 2, 3).gen("x", 0, 0, 1).precedence({"h", "g", "b", "dT", "a", "th", "x"});
    detail::gl_rules(b);
    b.rule("x*th", "th*x + h*x*x", "h-plane")
        .rule("th*th*th", "0", "h-plane nilpotency")
        .rule("x*h", "h*x", "h passage")
        .rule("th*h", "j*h*th", "h passage");
    detail::cross_rules(b, {"th", "x"}, b.current().gens);
    presentation p = b.build();
    p.q = rational(1);
    return p;
}

// Dual-plane grades (phi_hat, y_hat) are parameters so the variant oracle can scan them.
inline presentation coaction_dual(int phi_grade = 1, int y_grade = 2)
{
    preset_builder b("coaction_dual");
    detail::gl_generators(b);
    b.gen("y", y_grade, y_grade, 2).gen("phi", phi_grade, phi_grade, 1, 3);
    b.precedence({"h", "g", "b", "dT", "a", "y", "phi"});
    detail::gl_rules(b);
    b.rule("phi*y", "j*y*phi + h*j^2*phi*phi", "dual h-plane")
        .rule("phi*phi*phi", "0", "dual h-plane nilpotency")
        .rule("y*h", "j^" + std::to_string(y_grade) + "*h*y", "h passage")
        .rule("phi*h", "j^" + std::to_string(phi_grade) + "*h*phi", "h passage");
    detail::cross_rules(b, {"phi", "y"}, b.current().gens);
    presentation p = b.build();
    p.q = rational(1);
    return p;
}

inline const std::vector<std::string> &names()
{
    static const std::vector<std::string> n{"q_plane",  "h_plane",  "qjh_calculus", "hj_calculus",
                                            "weyl",     "cartan",   "glhj",         "glhj_loc",
                                            "dual_plane", "coaction_plane", "coaction_dual"};
    return n;
}

} // namespace presets

inline presentation build(const std::string &name)
{
    static const std::map<std::string, std::function<presentation()>> factories{
        {"q_plane", presets::q_plane},
        {"h_plane", presets::h_plane},
        {"qjh_calculus", presets::qjh_calculus},
        {"hj_calculus", presets::hj_calculus},
        {"weyl", presets::weyl},
        {"cartan", [] { return presets::cartan(); }},
        {"glhj", presets::glhj},
        {"glhj_loc", [] { return presets::glhj_loc(); }},
        {"dual_plane", presets::dual_plane},
        {"coaction_plane", presets::coaction_plane},
        {"coaction_dual", [] { return presets::coaction_dual(); }},
    };
    auto it = factories.find(name);
    if (it == factories.end()) {
        throw unknown_preset(name);
    }
    return it->second();
}

// Same alphabet and rule set (by left-hand side), ignoring provenance tags.
inline std::vector<std::string> rule_differences(const presentation &a, const presentation &b)
{
    std::vector<std::string> diffs;
    std::map<word, const rewrite_rule *> rb;
    for (const auto &r : b.rules) {
        rb[r.lhs] = &r;
    }
    for (const auto &r : a.rules) {
        auto it = rb.find(r.lhs);
        if (it == rb.end()) {
            diffs.push_back("missing " + word_text(r.lhs) + " in " + b.name);
            continue;
        }
        if (it->second->rhs != r.rhs) {
            diffs.push_back(word_text(r.lhs) + ": " + print(r.rhs, a.order) + " vs " + print(it->second->rhs, b.order));
        }
        rb.erase(it);
    }
    for (const auto &[lhs, r] : rb) {
        diffs.push_back("missing " + word_text(lhs) + " in " + a.name);
    }
    return diffs;
}

inline presentation specialize(const presentation &P, const rational &q0)
{
    presentation r = P;
    r.q = q0;
    for (auto &rule : r.rules) {
        try {
            rule.rhs = rule.rhs.map_coeffs([&](const scalar &c) { return c.specialize_q(q0); });
        } catch (const pole_error &e) {
            throw pole_error(std::string(e.what()) + " in rule " + word_text(rule.lhs) + " -> "
                             + print(rule.rhs, P.order));
        }
    }
    return r;
}

namespace detail
{

inline void scalar_check(report &rep, const std::string &name, const scalar &got, const scalar &want)
{
    rep.add(name, got == want, got == want ? std::nullopt : std::optional<std::string>(to_string(got) + " != " + to_string(want)));
}

} // namespace detail

// Replays the contraction of the q-deformed calculus: the solved coefficients,
// the consistency identities they satisfy, and the change of generators that
// carries the primed relations into the (q,j,h) calculus.
inline report verify_contraction()
{
    report rep{"contraction", {}};
    const scalar q = scalar::q();
    const scalar j = scalar::j();
    const scalar j2 = j * j;
    const scalar A = j2, B = j, F11 = q, F12 = j2 - scalar(1), F21 = j * q.inverse(), F22 = scalar(0), F = q * j;

    detail::scalar_check(rep, "F11 = q(1 + j F22)", F11, q * (scalar(1) + j * F22));
    detail::scalar_check(rep, "F12 = q j F21 - 1", F12, q * j * F21 - scalar(1));
    detail::scalar_check(rep, "K1 = 0", B * j2 * q - F22 * j2 * q - F11, scalar(0));
    detail::scalar_check(rep, "K2 = 0", B * j - F21 * j2 * q - F12, scalar(0));
    detail::scalar_check(rep, "K3 = 0", B * j2 - F21 * q - F22 * q + A * j2 * q - F11 * j - F12 * j, scalar(0));
    const scalar c = (q - scalar(1)).inverse();
    detail::scalar_check(rep, "h coefficient of x dth", c * (F11 * j + F12 * j - A * j), j);
    detail::scalar_check(rep, "h coefficient of th dx", c * (F21 * j + F22 * j - A), -q.inverse() * j2);
    detail::scalar_check(rep, "1 + jB + j^2 B^2 = 0 for B = j", scalar(1) + j * B + j2 * B * B, scalar(0));
    const scalar one(1);
    rep.add("1 + jB + j^2 B^2 = 0 for B = 1 (unused root)", (scalar(1) + j * one + j2 * one * one).is_zero());

    presentation P = presets::qjh_calculus();
    reducer red(P);
    polynomial x = polynomial::gen("x"), th = polynomial::gen("th"), h = polynomial::gen("h");
    polynomial dx = polynomial::gen("dx"), dth = polynomial::gen("dth");
    polynomial d2x = polynomial::gen("d2x"), d2th = polynomial::gen("d2th");
    polynomial X = x, TH = th + c * (h * x);
    polynomial DX = dx, DTH = dth + (j * c) * (h * dx);
    polynomial D2X = d2x, D2TH = d2th + (j2 * c) * (h * d2x);
    auto zero = [&](const std::string &name, const polynomial &e) {
        polynomial r = red.normal_form(e);
        rep.add(name, r.is_zero(), r.is_zero() ? std::nullopt : std::optional<std::string>(print(r, P.order)));
    };
    zero("x' th' - q th' x'", X * TH - q * (TH * X));
    zero("x' dx' - A dx' x'", X * DX - A * (DX * X));
    zero("x' dth' - F11 dth' x' - F12 dx' th'", X * DTH - F11 * (DTH * X) - F12 * (DX * TH));
    zero("th' dx' - F21 dx' th' - F22 dth' x'", TH * DX - F21 * (DX * TH) - F22 * (DTH * X));
    zero("th' dth' - B dth' th'", TH * DTH - B * (DTH * TH));
    zero("dx' dth' - F dth' dx'", DX * DTH - F * (DTH * DX));
    zero("x' d2x' - j^2 d2x' x'", X * D2X - j2 * (D2X * X));
    zero("th' d2th' - d2th' th'", TH * D2TH - D2TH * TH);
    return rep;
}

} // namespace z3calc

#endif
