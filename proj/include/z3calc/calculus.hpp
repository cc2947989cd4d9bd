#ifndef Z3CALC_CALCULUS_HPP
#define Z3CALC_CALCULUS_HPP

#include <z3calc/presets.hpp>

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace z3calc
{

class not_closed_under_d : public algebra_error
{
public:
    explicit not_closed_under_d(const std::string &name)
        : algebra_error("alphabet not closed under d: no image for '" + name + "'")
    {
    }
};

// Exterior differential with the graded Leibniz rule
// d(g1...gn) = sum_i lambda(g1)...lambda(g_{i-1}) g1...d(gi)...gn.
// Generators without a declared image that cancel against one with an image
// (x^-1 * x -> 1) get d(x^-1) = -lambda(x)^-1 x^-1 d(x) x^-1.
class differential
{
public:
    explicit differential(const presentation &P) : differential(std::make_shared<const presentation>(P)) {}
    explicit differential(std::shared_ptr<const presentation> P) : P_(std::move(P)), red_(P_)
    {
        for (const auto &g : P_->gens.generators()) {
            symbol s = sym(g.name);
            lambda_[s] = g.d_passage ? *g.d_passage : scalar::j().pow(g.omega);
            if (!g.d_image) {
                continue;
            }
            images_[s] = *g.d_image == "zero" ? polynomial() : polynomial(word{sym(*g.d_image)});
        }
        for (const auto &r : P_->rules) {
            if (r.lhs.size() != 2 || r.rhs != polynomial(1)) {
                continue;
            }
            symbol base = r.lhs[0], inv = r.lhs[1];
            if (images_.count(inv) != 0 || images_.count(base) == 0) {
                continue;
            }
            polynomial I(word{inv});
            images_[inv] = -(lambda_.at(base).inverse() * red_.normal_form(I * images_.at(base) * I));
        }
    }

    const presentation &target() const
    {
        return *P_;
    }
    const reducer &reduce() const
    {
        return red_;
    }
    bool has_image(symbol s) const
    {
        return images_.count(s) != 0;
    }
    const polynomial &image(symbol s) const
    {
        auto it = images_.find(s);
        if (it == images_.end()) {
            throw not_closed_under_d(sym_name(s));
        }
        return it->second;
    }
    const scalar &passage(symbol s) const
    {
        auto it = lambda_.find(s);
        if (it == lambda_.end()) {
            throw unknown_generator(sym_name(s));
        }
        return it->second;
    }

    // Leibniz expansion without reduction.
    polynomial leibniz(const polynomial &p) const
    {
        polynomial out;
        for (const auto &[w, c] : p.terms()) {
            scalar pref = c;
            for (std::size_t i = 0; i < w.size(); ++i) {
                const polynomial &img = image(w[i]);
                if (!img.is_zero()) {
                    word head(w.begin(), w.begin() + static_cast<long>(i));
                    word tail(w.begin() + static_cast<long>(i) + 1, w.end());
                    out += pref * (polynomial(head) * img * polynomial(tail));
                }
                pref *= passage(w[i]);
            }
        }
        return out;
    }
    polynomial operator()(const polynomial &p) const
    {
        return red_.normal_form(leibniz(p));
    }
    polynomial apply(const polynomial &p, unsigned times) const
    {
        polynomial r = p;
        for (unsigned i = 0; i < times; ++i) {
            r = (*this)(r);
        }
        return r;
    }

private:
    std::shared_ptr<const presentation> P_;
    reducer red_;
    std::map<symbol, polynomial> images_;
    std::map<symbol, scalar> lambda_;
};

enum class axis { x, th };

inline const char *axis_name(axis a)
{
    return a == axis::x ? "x" : "th";
}

// Commutation of a partial derivative past a leading generator. Each entry is a
// polynomial whose words may end in px or pth, meaning the partial applied to
// the rest of the word; words without a trailing partial multiply the rest.
class partial_table
{
public:
    explicit partial_table(bool symbolic_q = true)
    {
        std::string q = symbolic_q ? "q" : "1";
        std::string qi = symbolic_q ? "q^-1" : "1";
        set(axis::x, "x", "1 + j^2*x*px + (j^2 - 1)*th*pth + h*x*pth");
        set(axis::th, "x", q + "*x*pth");
        set(axis::x, "th", "j^2*" + qi + "*(th - h*x)*px");
        set(axis::th, "th", "1 + j^2*th*pth");
        set(axis::x, "h", "h*px");
        set(axis::th, "h", qi + "*j^2*h*pth");
        set(axis::x, "dx", "j*dx*px - j^2*h*dx*pth");
        set(axis::th, "dx", q + "*j^2*dx*pth");
        set(axis::x, "dth", qi + "*dth*px + " + qi + "*j*h*dx*px");
        set(axis::th, "dth", "(j^2 - j)*dx*px + j^2*dth*pth");
    }

    const polynomial &entry(axis a, symbol g) const
    {
        auto it = entries_.find({a, g});
        if (it == entries_.end()) {
            throw algebra_error(std::string("partial derivative undefined on words starting with '") + sym_name(g)
                                + "'");
        }
        return it->second;
    }
    const std::map<std::pair<axis, symbol>, polynomial> &entries() const
    {
        return entries_;
    }

private:
    void set(axis a, const std::string &g, const std::string &rhs)
    {
        entries_[{a, sym(g)}] = parse_poly(rhs);
    }

    std::map<std::pair<axis, symbol>, polynomial> entries_;
};

// Partial derivatives d_x, d_th on the plane with differentials, by recursion on
// the leading generator; results are reduced in the given presentation.
class partial_operator
{
public:
    explicit partial_operator(const presentation &P = presets::qjh_calculus())
        : P_(std::make_shared<const presentation>(P)), red_(P_), table_(!P.q.has_value())
    {
    }

    const reducer &reduce() const
    {
        return red_;
    }
    const partial_table &table() const
    {
        return table_;
    }

    polynomial operator()(axis a, const polynomial &p) const
    {
        polynomial out;
        for (const auto &[w, c] : p.terms()) {
            out += c * of_word(a, w);
        }
        return out;
    }

    polynomial of_word(axis a, const word &w) const
    {
        if (w.empty()) {
            return {};
        }
        {
            std::lock_guard<std::mutex> lock(m_);
            auto it = memo_.find({a, w});
            if (it != memo_.end()) {
                return it->second;
            }
        }
        const symbol px = sym("px"), pth = sym("pth");
        word rest(w.begin() + 1, w.end());
        polynomial raw;
        for (const auto &[tw, c] : table_.entry(a, w[0]).terms()) {
            if (!tw.empty() && (tw.back() == px || tw.back() == pth)) {
                word head(tw.begin(), tw.end() - 1);
                raw += c * (polynomial(head) * of_word(tw.back() == px ? axis::x : axis::th, rest));
            } else {
                raw += polynomial(concat(tw, rest), c);
            }
        }
        polynomial r = red_.normal_form(raw);
        std::lock_guard<std::mutex> lock(m_);
        memo_.emplace(std::make_pair(a, w), r);
        return r;
    }

private:
    std::shared_ptr<const presentation> P_;
    reducer red_;
    partial_table table_;
    mutable std::mutex m_;
    mutable std::map<std::pair<axis, word>, polynomial> memo_;
};

// Monomials h^a th^b x^c with a, b <= max_hb and c <= max_x.
inline std::vector<word> monomial_basis(int max_hb = 2, int max_x = 6)
{
    std::vector<word> out;
    for (int a = 0; a <= max_hb; ++a) {
        for (int b = 0; b <= max_hb; ++b) {
            for (int c = 0; c <= max_x; ++c) {
                word w;
                w.insert(w.end(), static_cast<std::size_t>(a), sym("h"));
                w.insert(w.end(), static_cast<std::size_t>(b), sym("th"));
                w.insert(w.end(), static_cast<std::size_t>(c), sym("x"));
                out.push_back(w);
            }
        }
    }
    return out;
}

namespace detail
{

inline std::optional<std::string> residual(const polynomial &r, const presentation &P)
{
    return r.is_zero() ? std::nullopt : std::optional<std::string>(print(r, P.order));
}

// Aggregates many zero-checks into one entry carrying the first few failures.
class tally
{
public:
    void add(const std::string &where, const polynomial &r, const presentation &P)
    {
        ++total_;
        if (r.is_zero()) {
            return;
        }
        ++bad_;
        if (bad_ <= 3) {
            wit_ += (wit_.empty() ? "" : "; ") + where + ": " + print(r, P.order);
        }
    }
    void commit(report &rep, const std::string &name) const
    {
        if (bad_ == 0) {
            rep.add(name + " (" + std::to_string(total_) + " cases)", true);
        } else {
            rep.add(name + " (" + std::to_string(total_) + " cases)", false,
                    std::to_string(bad_) + " failing; " + wit_);
        }
    }

private:
    std::size_t total_ = 0;
    std::size_t bad_ = 0;
    std::string wit_;
};

inline polynomial relation(const rewrite_rule &r)
{
    return polynomial(r.lhs) - r.rhs;
}

inline const rewrite_rule &rule_for(const presentation &P, const std::string &lhs)
{
    auto names = generator_names(P.gens);
    polynomial l = parse_poly(lhs, names);
    const rewrite_rule *r = P.find_rule(l.terms().begin()->first);
    if (r == nullptr) {
        throw algebra_error("no rule with left-hand side " + lhs + " in " + P.name);
    }
    return *r;
}

inline polynomial random_poly(std::mt19937 &rng, const std::vector<symbol> &alpha, int max_deg, int max_terms)
{
    std::uniform_int_distribution<int> deg(0, max_deg), nterms(1, max_terms), coef(-3, 3);
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    polynomial p;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        word w;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) {
            w.push_back(alpha[pick(rng)]);
        }
        int c = coef(rng);
        p.add_term(w, scalar(c == 0 ? 1 : c));
    }
    return p;
}

// Random polynomial all of whose words have grade g.
inline polynomial random_homogeneous(std::mt19937 &rng, const std::vector<symbol> &alpha, const alphabet &A, int g,
                                     int max_deg, int max_terms)
{
    std::uniform_int_distribution<int> deg(1, max_deg), nterms(1, max_terms), coef(1, 4);
    std::uniform_int_distribution<std::size_t> pick(0, alpha.size() - 1);
    polynomial p;
    int n = nterms(rng);
    while (static_cast<int>(p.size()) < n) {
        word w;
        int d = deg(rng);
        for (int i = 0; i < d; ++i) {
            w.push_back(alpha[pick(rng)]);
        }
        if (A.grade(w) == g) {
            p.add_term(w, scalar(coef(rng)));
        }
    }
    return p;
}

inline report replay_relations(const std::string &suite, const std::vector<std::string> &lhs)
{
    presentation P = presets::qjh_calculus();
    differential d(P);
    report rep{suite, {}};
    for (const auto &l : lhs) {
        const rewrite_rule &r = rule_for(P, l);
        polynomial res = d(relation(r));
        rep.add("d(" + l + " relation)", res.is_zero(), residual(res, P));
    }
    return rep;
}

} // namespace detail

// d applied to the coordinate relations lands in the first-order relations.
inline report replay_thm3_2()
{
    return detail::replay_relations("thm3_2", {"x*th", "th*th*th", "x*h", "th*h"});
}

inline report replay_thm3_4()
{
    return detail::replay_relations("thm3_4", {"x*dx", "x*dth", "th*dx", "th*dth", "dx*h", "dth*h"});
}

inline report replay_lemma3_5()
{
    return detail::replay_relations("lemma3_5", {"x*d2x", "x*d2th", "th*d2x", "th*d2th", "dx*dth", "d2x*h", "d2th*h"});
}

inline report replay_cor3_6()
{
    return detail::replay_relations("cor3_6", {"dx*d2x", "dx*d2th", "dth*d2x", "dth*d2th", "d2x*d2th", "dx*dx*dx"});
}

// d(d(a b)) = d2a b + (j^a + j^(a+1)) da db + j^(2a) a d2b for homogeneous a of grade a.
inline report replay_iterated_leibniz(unsigned samples = 60, unsigned seed = 20240917)
{
    presentation P = presets::qjh_calculus();
    differential d(P);
    const alphabet &A = P.gens;
    std::vector<symbol> alpha{sym("h"), sym("th"), sym("x"), sym("dx"), sym("dth")};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> grade(0, 2);
    report rep{"iterated_leibniz", {}};
    detail::tally free_t, reduced_t;
    for (unsigned i = 0; i < samples; ++i) {
        int ga = grade(rng);
        polynomial a = detail::random_homogeneous(rng, alpha, A, ga, 3, 3);
        polynomial b = detail::random_homogeneous(rng, alpha, A, grade(rng), 3, 3);
        scalar j = scalar::j();
        polynomial lhs = d.leibniz(d.leibniz(a * b));
        polynomial da = d.leibniz(a), db = d.leibniz(b);
        polynomial rhs = d.leibniz(da) * b + (j.pow(ga) + j.pow(ga + 1)) * (da * db) + j.pow(2 * ga) * (a * d.leibniz(db));
        std::string where = "sample " + std::to_string(i);
        free_t.add(where, lhs - rhs, P);
        reduced_t.add(where, d.reduce().normal_form(lhs - rhs), P);
    }
    free_t.commit(rep, "second-order Leibniz coefficient, free algebra");
    reduced_t.commit(rep, "second-order Leibniz coefficient, reduced");
    return rep;
}

// d^3 = 0, d^2 x != 0, compatibility of d with normal forms, grade shift.
inline report replay_tower(unsigned samples = 100, unsigned seed = 7)
{
    presentation P = presets::qjh_calculus();
    differential d(P);
    const reducer &red = d.reduce();
    std::vector<symbol> alpha{sym("h"), sym("th"), sym("x"), sym("dx"), sym("dth")};
    std::mt19937 rng(seed);
    report rep{"tower", {}};
    detail::tally cube, free_cube, compat, grade;
    for (unsigned i = 0; i < samples; ++i) {
        polynomial p = detail::random_poly(rng, alpha, 5, 3);
        std::string where = print(p, P.order);
        cube.add(where, d.apply(p, 3), P);
        free_cube.add(where, d.leibniz(d.leibniz(d.leibniz(p))), P);
        compat.add(where, d(red.normal_form(p)) - d(p), P);
        for (const auto &[w, c] : p.terms()) {
            polynomial dp = d.leibniz(polynomial(w));
            auto g = homogeneous_grade(dp, P.gens);
            bool ok = dp.is_zero() || (g && *g == mod3(P.gens.grade(w) + 1));
            grade.add(word_text(w), ok ? polynomial() : dp, P);
        }
    }
    cube.commit(rep, "d^3 = 0 on random polynomials");
    free_cube.commit(rep, "d^3 = 0 in the free algebra");
    polynomial d2x = d.apply(polynomial::gen("x"), 2);
    rep.add("d^2 x = d2x", d2x == polynomial::gen("d2x"), print(d2x, P.order));
    rep.add("d^2 x != 0", !d2x.is_zero());
    compat.commit(rep, "d(nf(p)) = nf(d(p))");
    grade.commit(rep, "grade(d w) = grade(w) + 1");
    return rep;
}

inline report verify_df_decomposition(const std::vector<word> &basis = monomial_basis())
{
    presentation P = presets::qjh_calculus();
    differential d(P);
    partial_operator part(P);
    report rep{"df decomposition", {}};
    detail::tally t;
    polynomial dx = polynomial::gen("dx"), dth = polynomial::gen("dth");
    for (const auto &m : basis) {
        polynomial p(m);
        polynomial rhs = dx * part(axis::x, p) + dth * part(axis::th, p);
        t.add(word_text(m), d(p) - d.reduce().normal_form(rhs), P);
    }
    t.commit(rep, "d f = dx d_x f + dth d_th f");
    return rep;
}

inline report replay_partials()
{
    presentation P = presets::qjh_calculus();
    partial_operator part(P);
    const reducer &red = part.reduce();
    const partial_table &tab = part.table();
    auto basis = monomial_basis();
    report rep{"partials", {}};
    const symbol px = sym("px"), pth = sym("pth");

    // Commutation relations as operator identities: d_a(nf(g m)) against the table.
    for (const char *g : {"x", "th", "dx", "dth"}) {
        for (axis a : {axis::x, axis::th}) {
            detail::tally t;
            for (const auto &m : basis) {
                polynomial lhs = part(a, red.normal_form(polynomial(concat(word{sym(g)}, m))));
                polynomial rhs;
                for (const auto &[tw, c] : tab.entry(a, sym(g)).terms()) {
                    if (!tw.empty() && (tw.back() == px || tw.back() == pth)) {
                        word head(tw.begin(), tw.end() - 1);
                        rhs += c * (polynomial(head) * part(tw.back() == px ? axis::x : axis::th, polynomial(m)));
                    } else {
                        rhs += polynomial(concat(tw, m), c);
                    }
                }
                t.add(word_text(m), lhs - red.normal_form(rhs), P);
            }
            t.commit(rep, std::string("d_") + axis_name(a) + " past " + g);
        }
    }

    detail::tally mixed, cube, grades;
    const scalar jq = scalar::j() * scalar::q();
    for (const auto &m : basis) {
        polynomial p(m);
        polynomial xt = part(axis::x, part(axis::th, p));
        polynomial tx = part(axis::th, part(axis::x, p));
        mixed.add(word_text(m), xt - jq * tx, P);
        cube.add(word_text(m), part(axis::th, part(axis::th, part(axis::th, p))), P);
        for (axis a : {axis::x, axis::th}) {
            polynomial r = part(a, p);
            auto g = homogeneous_grade(r, P.gens);
            int shift = a == axis::x ? 0 : 2;
            bool ok = r.is_zero() || (g && *g == mod3(P.gens.grade(m) + shift));
            grades.add(word_text(m), ok ? polynomial() : r, P);
        }
    }
    mixed.commit(rep, "d_x d_th = jq d_th d_x");
    cube.commit(rep, "d_th^3 = 0");
    grades.commit(rep, "partials shift grade by omega");

    // Well-definedness: each relation over {h, th, x, dx, dth} is annihilated.
    std::vector<symbol> domain{sym("h"), sym("th"), sym("x"), sym("dx"), sym("dth")};
    auto in_domain = [&](const word &w) {
        return std::all_of(w.begin(), w.end(),
                           [&](symbol s) { return std::find(domain.begin(), domain.end(), s) != domain.end(); });
    };
    auto small = monomial_basis(1, 2);
    for (const auto &r : P.rules) {
        if (!in_domain(r.lhs)) {
            continue;
        }
        for (axis a : {axis::x, axis::th}) {
            detail::tally t;
            polynomial rel = detail::relation(r);
            for (const auto &m : small) {
                t.add(word_text(m), part(a, rel * polynomial(m)), P);
            }
            t.commit(rep, std::string("d_") + axis_name(a) + " kills (" + word_text(r.lhs) + " relation)*m");
        }
    }
    rep.append(verify_df_decomposition(basis));
    return rep;
}

// The weyl preset, read as operators on functions, agrees with the recursion at q = 1.
inline report replay_weyl()
{
    presentation W = presets::weyl();
    reducer red(W);
    partial_operator part(presets::qjh_calculus());
    const symbol px = sym("px"), pth = sym("pth");
    report rep{"weyl", {}};
    for (axis a : {axis::x, axis::th}) {
        detail::tally t;
        for (const auto &m : monomial_basis()) {
            polynomial op = red.normal_form(polynomial(concat(word{a == axis::x ? px : pth}, m)));
            polynomial acted;
            for (const auto &[w, c] : op.terms()) {
                if (std::find(w.begin(), w.end(), px) == w.end() && std::find(w.begin(), w.end(), pth) == w.end()) {
                    acted.add_term(w, c);
                }
            }
            polynomial rec = part(a, polynomial(m)).map_coeffs([](const scalar &c) { return c.specialize_q(1); });
            t.add(word_text(m), acted - rec, W);
        }
        t.commit(rep, std::string("weyl d_") + axis_name(a) + " matches recursion at q = 1");
    }
    rep.append(validate(W));
    return rep;
}

// Cartan-Maurer forms as elements of the localized calculus.
struct cartan_forms_t {
    polynomial w;
    polynomial u;
};

inline cartan_forms_t cartan_definitions()
{
    polynomial dx = polynomial::gen("dx"), dth = polynomial::gen("dth");
    polynomial xi = polynomial::gen("xinv"), th = polynomial::gen("th");
    return {dx * xi, dth * xi - dx * xi * th * xi};
}

inline cartan_forms_t cartan_forms(const presentation &C)
{
    reducer red(C);
    auto def = cartan_definitions();
    return {red.normal_form(def.w), red.normal_form(def.u)};
}

inline report cartan_verify()
{
    report derivation;
    presentation C = presets::cartan(&derivation);
    differential d(C);
    const reducer &red = d.reduce();
    auto def = cartan_definitions();
    std::map<symbol, polynomial> images{{sym("w"), def.w}, {sym("u"), def.u}};
    const symbol w = sym("w"), u = sym("u");
    report rep{"cartan", {}};
    rep.append(derivation, "localization: ");
    rep.add("w is the normal word dx*xinv", red.normal_form(def.w) == def.w, print(red.normal_form(def.w), C.order));
    polynomial x = polynomial::gen("x"), xi = polynomial::gen("xinv");
    polynomial c1 = d(x * xi), c2 = d(xi * x);
    rep.add("d(x*xinv) = 0", c1.is_zero(), detail::residual(c1, C));
    rep.add("d(xinv*x) = 0", c2.is_zero(), detail::residual(c2, C));
    for (const auto &r : C.rules) {
        bool uses = std::find(r.lhs.begin(), r.lhs.end(), w) != r.lhs.end()
                    || std::find(r.lhs.begin(), r.lhs.end(), u) != r.lhs.end();
        if (!uses || r.ref == "derived inverse passage") {
            continue;
        }
        polynomial res = red.normal_form(substitute(detail::relation(r), images));
        rep.add(word_text(r.lhs) + " relation with w, u substituted", res.is_zero(), detail::residual(res, C));
    }
    polynomial d2w = d.apply(def.w, 2), d2u = d.apply(def.u, 2);
    rep.add("d^2 w = 0", d2w.is_zero(), detail::residual(d2w, C));
    rep.add("d^2 u = 0", d2u.is_zero(), detail::residual(d2u, C));
    return rep;
}

namespace detail
{

// Relations transcribed from the q = 1 lists, as (lhs, rhs) text.
inline const std::vector<std::pair<std::string, std::string>> &partials_at_one()
{
    static const std::vector<std::pair<std::string, std::string>> v{
        {"px*x", "1 + j^2*x*px + (j^2 - 1)*th*pth + h*x*pth"},
        {"pth*x", "x*pth"},
        {"px*th", "j^2*(th - h*x)*px"},
        {"pth*th", "1 + j^2*th*pth"},
        {"px*dx", "j*dx*px - j^2*h*dx*pth"},
        {"px*dth", "dth*px + j*h*dx*px"},
        {"pth*dx", "j^2*dx*pth"},
        {"pth*dth", "(j^2 - j)*dx*px + j^2*dth*pth"},
    };
    return v;
}

inline const std::vector<std::pair<std::string, std::string>> &cartan_at_one()
{
    static const std::vector<std::pair<std::string, std::string>> v{
        {"x*w", "j^2*w*x"},
        {"x*u", "u*x"},
        {"th*w", "j*w*th"},
        {"th*u", "j*u*th + h*u*x"},
        {"w*dx", "j*dx*w"},
        {"u*dx", "dx*u"},
        {"w*dth", "j*dth*w + (1 - j)*th*xinv*dx*w"},
        {"u*dth", "dth*u - h*dx*u + ((1 - j)*th*xinv - h)*dx*u"},
        {"w*d2x", "j^2*d2x*w"},
        {"u*d2x", "d2x*u"},
        {"w*d2th", "(j - j^2)*d2x*u + d2th*w"},
        {"u*d2th", "d2th*u + ((j - j^2)*xinv*th - j^2*h)*d2x*u"},
        {"u*w", "w*u"},
        {"w*w*w", "0"},
    };
    return v;
}

} // namespace detail

// q -> 1 limits against the relation lists stated for q = 1.
inline report verify_specialization()
{
    report rep{"specialization", {}};
    presentation qjh1 = specialize(presets::qjh_calculus(), 1);
    presentation hj = presets::hj_calculus();
    std::map<word, const rewrite_rule *> hj_rules;
    for (const auto &r : hj.rules) {
        hj_rules[r.lhs] = &r;
    }
    for (const auto &r : qjh1.rules) {
        auto it = hj_rules.find(r.lhs);
        bool ok = it != hj_rules.end() && it->second->rhs == r.rhs;
        std::optional<std::string> wit;
        if (!ok) {
            wit = it == hj_rules.end() ? "missing in hj_calculus"
                                       : print(r.rhs, qjh1.order) + " vs " + print(it->second->rhs, hj.order);
        }
        rep.add("q -> 1 rule " + word_text(r.lhs), ok, wit);
    }
    rep.add("same rule count", qjh1.rules.size() == hj.rules.size(),
            std::to_string(qjh1.rules.size()) + " vs " + std::to_string(hj.rules.size()));

    partial_table table(true);
    presentation W = presets::weyl();
    for (const auto &[lhs, rhs] : detail::partials_at_one()) {
        polynomial l = parse_poly(lhs);
        const word &lw = l.terms().begin()->first;
        axis a = lw[0] == sym("px") ? axis::x : axis::th;
        polynomial got = table.entry(a, lw[1]).map_coeffs([](const scalar &c) { return c.specialize_q(1); });
        polynomial want = parse_poly(rhs);
        rep.add("q -> 1 partial " + lhs, got == want, got == want ? std::nullopt
                                                                   : std::optional<std::string>(print(got - want, W.order)));
        if (const rewrite_rule *wr = W.find_rule(lw)) {
            rep.add("weyl rule " + lhs + " matches", wr->rhs == want, print(wr->rhs, W.order));
        }
    }
    polynomial mixed = parse_poly("j*pth*px");
    const rewrite_rule *wr = W.find_rule(make_word({"px", "pth"}));
    rep.add("weyl rule px*pth matches jq at q = 1", wr != nullptr && wr->rhs == mixed);

    presentation C1 = specialize(presets::cartan(), 1);
    reducer red(C1);
    auto names = generator_names(C1.gens);
    for (const auto &[lhs, rhs] : detail::cartan_at_one()) {
        polynomial l = parse_poly(lhs, names);
        polynomial res = red.normal_form(l - parse_poly(rhs, names));
        rep.add("q -> 1 cartan " + lhs, res.is_zero(), detail::residual(res, C1));
    }
    return rep;
}

} // namespace z3calc

#endif
