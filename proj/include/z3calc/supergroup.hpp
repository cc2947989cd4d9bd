#ifndef Z3CALC_SUPERGROUP_HPP
#define Z3CALC_SUPERGROUP_HPP

#include <z3calc/presets.hpp>

#include <array>
#include <string>
#include <vector>

namespace z3calc
{

// 2x2 supermatrix [[a, b], [g, dT]], entries as polynomials.
using super_matrix = std::array<std::array<polynomial, 2>, 2>;

inline super_matrix generic_matrix()
{
    return {{{polynomial::gen("a"), polynomial::gen("b")}, {polynomial::gen("g"), polynomial::gen("dT")}}};
}

inline super_matrix multiply(const super_matrix &X, const super_matrix &Y)
{
    super_matrix R;
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            R[r][c] = X[r][0] * Y[0][c] + X[r][1] * Y[1][c];
        }
    }
    return R;
}

// The relations of the supermatrix entries, one rule each, by left-hand side.
inline const std::vector<std::string> &supermatrix_relations()
{
    static const std::vector<std::string> v{"a*b", "a*g", "dT*b", "dT*g", "b*b*b", "g*g*g", "b*g", "a*dT"};
    return v;
}

// x -> a x + b th, th -> g x + dT th.
inline graded_hom plane_coaction()
{
    graded_hom s;
    s.set("x", parse_poly("a*x + b*th"));
    s.set("th", parse_poly("g*x + dT*th"));
    return s;
}

inline polynomial coact_plane(const polynomial &p)
{
    return plane_coaction()(p);
}

// phi -> a phi + j^2 b y, y -> j g phi + dT y (the variant selected by dual_variant_oracle).
inline graded_hom dual_coaction(const std::string &ytilde = "j*g*phi + dT*y")
{
    graded_hom s;
    s.set("phi", parse_poly("a*phi + j^2*b*y"));
    s.set("y", parse_poly(ytilde));
    return s;
}

inline polynomial coact_dual(const polynomial &p)
{
    return dual_coaction()(p);
}

namespace detail
{

inline presentation without_rule(presentation P, const std::string &lhs)
{
    auto names = generator_names(P.gens);
    word w = parse_poly(lhs, names).terms().begin()->first;
    std::erase_if(P.rules, [&](const rewrite_rule &r) { return r.lhs == w; });
    P.name += " without " + lhs;
    return P;
}

struct comodule_residuals {
    polynomial relation; // x~ th~ - th~ x~ - h x~^2
    polynomial cube;     // th~^3
};

inline comodule_residuals plane_residuals(const presentation &P)
{
    reducer red(P);
    graded_hom s = plane_coaction();
    polynomial rel = parse_poly("x*th - th*x - h*x*x");
    polynomial cube = parse_poly("th*th*th");
    return {red.normal_form(s(rel)), red.normal_form(s(cube))};
}

struct dual_residuals {
    polynomial relation; // phi~ y~ - j y~ phi~ - h j^2 phi~^2
    polynomial cube;     // phi~^3
};

inline dual_residuals dual_residuals_in(const presentation &P, const std::string &ytilde = "j*g*phi + dT*y")
{
    reducer red(P);
    graded_hom s = dual_coaction(ytilde);
    polynomial rel = parse_poly("phi*y - j*y*phi - h*j^2*phi*phi");
    polynomial cube = parse_poly("phi*phi*phi");
    return {red.normal_form(s(rel)), red.normal_form(s(cube))};
}

inline std::optional<std::string> show(const polynomial &r, const presentation &P)
{
    return r.is_zero() ? std::nullopt : std::optional<std::string>(print(r, P.order));
}

inline bool vanishes_mod_h(const polynomial &r)
{
    return r.is_zero() || r.min_count(sym("h")) >= 1;
}

} // namespace detail

inline report verify_comodule()
{
    report rep{"comodule", {}};
    presentation P = presets::coaction_plane();
    presentation D = presets::coaction_dual();
    auto full = detail::plane_residuals(P);
    auto dual = detail::dual_residuals_in(D);
    rep.add("x~ th~ - th~ x~ - h x~^2 = 0", full.relation.is_zero(), detail::show(full.relation, P));
    rep.add("th~^3 = 0", full.cube.is_zero(), detail::show(full.cube, P));
    rep.add("phi~^3 = 0", dual.cube.is_zero(), detail::show(dual.cube, D));
    rep.add("phi~ y~ - j y~ phi~ - h j^2 phi~^2 = 0", dual.relation.is_zero(), detail::show(dual.relation, D));

    // Each relation must be needed: deleting it changes some coaction residual.
    for (const auto &lhs : supermatrix_relations()) {
        auto mp = detail::plane_residuals(detail::without_rule(P, lhs));
        auto md = detail::dual_residuals_in(detail::without_rule(D, lhs));
        std::vector<std::string> changed;
        if (mp.relation != full.relation) {
            changed.push_back("plane relation");
        }
        if (mp.cube != full.cube) {
            changed.push_back("th~^3");
        }
        if (md.relation != dual.relation) {
            changed.push_back("dual relation");
        }
        if (md.cube != dual.cube) {
            changed.push_back("phi~^3");
        }
        std::string wit;
        for (const auto &c : changed) {
            wit += (wit.empty() ? "" : ", ") + c;
        }
        if (changed.empty()) {
            wit = "no residual changes";
        } else if (mp.relation != full.relation) {
            wit += "; plane relation residual " + print(mp.relation, P.order);
        } else if (mp.cube != full.cube) {
            wit += "; th~^3 residual " + print(mp.cube, P.order);
        }
        rep.add("deleting " + lhs + " is detected", !changed.empty(), wit);
    }

    // The dual coaction reproduces a b = j b a and b^3 = 0: without either, phi~^3 survives.
    for (const char *lhs : {"a*b", "b*b*b"}) {
        auto md = detail::dual_residuals_in(detail::without_rule(D, lhs));
        rep.add(std::string("phi~^3 requires ") + lhs + " relation", !md.cube.is_zero(),
                md.cube.is_zero() ? std::optional<std::string>("phi~^3 still reduces to 0") : std::nullopt);
    }
    return rep;
}

// Scans dual-plane grades and y~ candidates; a variant qualifies when phi~^3 = 0
// and the dual relation holds modulo h.
inline report dual_variant_oracle()
{
    report rep{"dual variant", {}};
    const std::vector<std::string> candidates{"j*g*phi + dT*y", "j*g*y + dT*y", "g*phi + dT*y"};
    std::vector<std::string> qualifying;
    for (int phi = 0; phi < 3; ++phi) {
        int y = (phi + 1) % 3;
        presentation D = presets::coaction_dual(phi, y);
        for (const auto &c : candidates) {
            auto r = detail::dual_residuals_in(D, c);
            if (r.cube.is_zero() && detail::vanishes_mod_h(r.relation)) {
                qualifying.push_back("(phi, y) = (" + std::to_string(phi) + ", " + std::to_string(y) + "), y~ = " + c);
            }
        }
    }
    std::string list;
    for (const auto &q : qualifying) {
        list += (list.empty() ? "" : "; ") + q;
    }
    const std::string frozen = "(phi, y) = (1, 2), y~ = j*g*phi + dT*y";
    rep.add("unique qualifying variant is the shipped one", qualifying.size() == 1 && qualifying.front() == frozen,
            list.empty() ? "none" : list);
    return rep;
}

// Entries of T^-1 as printed, over the localized alphabet.
inline super_matrix t_inverse_raw()
{
    auto P = [](const char *s) { return parse_poly(s); };
    return {{{P("ainv + ainv*b*dTinv*g*ainv + ainv*b*dTinv*g*ainv*b*dTinv*g*ainv"),
              P("-ainv*b*dTinv - ainv*b*dTinv*g*ainv*b*dTinv")},
             {P("-dTinv*g*ainv - dTinv*g*ainv*b*dTinv*g*ainv"),
              P("dTinv + dTinv*g*ainv*b*dTinv + dTinv*g*ainv*b*dTinv*g*ainv*b*dTinv")}}};
}

inline super_matrix t_inverse(const presentation &L)
{
    reducer red(L);
    super_matrix m = t_inverse_raw();
    for (auto &row : m) {
        for (auto &e : row) {
            e = red.normal_form(e);
        }
    }
    return m;
}

inline polynomial sdet_raw()
{
    return parse_poly("a*dTinv + a*dTinv*g*ainv*b*dTinv + a*dTinv*g*ainv*b*dTinv*g*ainv*b*dTinv");
}

inline polynomial sdet(const presentation &L)
{
    return normal_form(sdet_raw(), L);
}

// Sends the listed generators to zero.
inline graded_hom killing(const std::vector<std::string> &names)
{
    graded_hom s;
    for (const auto &n : names) {
        s.set(n, polynomial());
    }
    return s;
}

inline report verify_inverse()
{
    report derivation;
    presentation L = presets::glhj_loc(&derivation);
    reducer red(L);
    report rep{"inverse", {}};
    rep.append(derivation, "localization: ");
    super_matrix T = generic_matrix(), Ti = t_inverse_raw();
    const char *idx[2] = {"1", "2"};
    for (const auto &[label, prod] : {std::pair{"T T^-1", multiply(T, Ti)}, std::pair{"T^-1 T", multiply(Ti, T)}}) {
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                polynomial e = prod[r][c] - polynomial(r == c ? 1 : 0);
                polynomial res = red.normal_form(e);
                rep.add(std::string(label) + " - I entry (" + idx[r] + "," + idx[c] + ")", res.is_zero(),
                        detail::show(res, L));
            }
        }
    }
    graded_hom diag = killing({"b", "g", "h"});
    super_matrix expect{{{polynomial::gen("ainv"), polynomial()}, {polynomial(), polynomial::gen("dTinv")}}};
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            polynomial e = red.normal_form(diag(Ti[r][c]));
            rep.add(std::string("T^-1 at b = g = h = 0, entry (") + idx[r] + "," + idx[c] + ")", e == expect[r][c],
                    print(e, L.order));
        }
    }
    return rep;
}

inline report verify_sdet()
{
    presentation L = presets::glhj_loc();
    reducer red(L);
    report rep{"sdet", {}};
    polynomial s = red.normal_form(sdet_raw());
    rep.add("sdet has a finite normal form", true, print(s, L.order));
    polynomial diag = red.normal_form(killing({"b", "g", "h"})(sdet_raw()));
    rep.add("sdet at b = g = h = 0 is a*dTinv", diag == parse_poly("a*dTinv"), print(diag, L.order));
    graded_hom no_h = killing({"h"});
    polynomial h0 = red.normal_form(no_h(red.normal_form(no_h(sdet_raw()))));
    rep.add("sdet at h = 0", !h0.is_zero(), print(h0, L.order));
    return rep;
}

} // namespace z3calc

#endif
