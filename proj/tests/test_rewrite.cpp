#include <z3calc/presets.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

using namespace z3calc;

namespace
{

polynomial nf(const std::string &s, const presentation &P)
{
    return normal_form(parse_poly(s, generator_names(P.gens)), P);
}

term_order plane_order()
{
    return term_order({{sym("h"), 1}, {sym("th"), 2}, {sym("x"), 1}}, {sym("h"), sym("th"), sym("x")});
}

} // namespace

TEST(Orient, AcceptsDecreasingRule)
{
    rewrite_rule r = orient(make_word({"x", "th"}), parse_poly("q*th*x + h*x*x"), plane_order(), "plane");
    EXPECT_EQ(r.ref, "plane");
    EXPECT_NO_THROW(orient(make_word({"th", "th", "th"}), polynomial(), plane_order()));
}

TEST(Orient, RejectsReversedRule)
{
    EXPECT_THROW(orient(make_word({"th", "x"}), parse_poly("q^-1*x*th - q^-1*h*x*x"), plane_order()),
                 orientation_error);
}

TEST(TermOrder, ShorterIsLargerAtEqualWeight)
{
    term_order o = plane_order();
    EXPECT_TRUE(o.less(make_word({"h", "x", "x"}), make_word({"x", "th"})));
    EXPECT_TRUE(o.less(make_word({"th", "x"}), make_word({"x", "th"})));
    EXPECT_TRUE(o.less(make_word({"x"}), make_word({"x", "x"})));
}

TEST(NormalForm, WorkedExamples)
{
    EXPECT_EQ(nf("x*th", presets::h_plane()), parse_poly("th*x + h*x*x"));
    presentation C = presets::qjh_calculus();
    EXPECT_EQ(nf("x*dx", C), parse_poly("j^2*dx*x"));
    EXPECT_EQ(nf("dx*dth", C), parse_poly("q*j*dth*dx + h*j^2*dx*dx"));
    EXPECT_TRUE(nf("th*th*th*x", C).is_zero());
}

TEST(NormalForm, IdempotentLinearAndGradePreserving)
{
    presentation C = presets::qjh_calculus();
    reducer red(C);
    std::mt19937 rng(1);
    std::vector<std::string> alpha{"h", "th", "x", "dx", "dth"};
    std::uniform_int_distribution<int> len(1, 5), pick(0, 4), coef(-2, 2);
    for (int i = 0; i < 60; ++i) {
        polynomial p, r;
        for (int t = 0; t < 3; ++t) {
            word w, v;
            int n = len(rng);
            for (int k = 0; k < n; ++k) {
                w.push_back(sym(alpha[pick(rng)]));
                v.push_back(sym(alpha[pick(rng)]));
            }
            p.add_term(w, scalar(coef(rng)));
            r.add_term(v, scalar(coef(rng)));
        }
        polynomial np = red.normal_form(p);
        EXPECT_EQ(red.normal_form(np), np);
        scalar a = scalar::q(), b = scalar::j();
        EXPECT_EQ(red.normal_form(a * p + b * r), a * np + b * red.normal_form(r));
        for (const auto &[w, c] : p.terms()) {
            polynomial n1 = red.normal_form(polynomial(w));
            if (!n1.is_zero()) {
                EXPECT_EQ(homogeneous_grade(n1, C.gens), C.gens.grade(w));
            }
        }
        for (const auto &[w, c] : np.terms()) {
            EXPECT_TRUE(red.is_normal(w));
        }
    }
}

TEST(NormalForm, ProductCompatibleOnConfluentPreset)
{
    presentation Q = presets::q_plane();
    reducer red(Q);
    std::mt19937 rng(2);
    std::uniform_int_distribution<int> len(0, 4), pick(0, 1);
    for (int i = 0; i < 50; ++i) {
        word a, b;
        for (int k = len(rng); k > 0; --k) {
            a.push_back(sym(pick(rng) ? "x" : "th"));
        }
        for (int k = len(rng); k > 0; --k) {
            b.push_back(sym(pick(rng) ? "x" : "th"));
        }
        polynomial pa(a), pb(b);
        EXPECT_EQ(red.normal_form(pa * pb), red.normal_form(red.normal_form(pa) * red.normal_form(pb)));
    }
}

TEST(NormalForm, BudgetExceededCarriesWord)
{
    presentation C = presets::qjh_calculus();
    reducer red(C, 3);
    try {
        red.normal_form(parse_poly("th*th*x*x*th"));
        FAIL() << "expected budget_exceeded";
    } catch (const budget_exceeded &e) {
        EXPECT_NE(std::string(e.what()).find("th"), std::string::npos);
    }
}

TEST(NormalForm, BudgetFromEnvironment)
{
    ::setenv("Z3CALC_STEP_BUDGET", "17", 1);
    EXPECT_EQ(step_budget_from_env(), 17u);
    ::unsetenv("Z3CALC_STEP_BUDGET");
    EXPECT_EQ(step_budget_from_env(), default_step_budget);
}

TEST(CriticalPairs, NoOverlapsWithoutNilpotency)
{
    preset_builder b("single");
    b.gen("h", 2, 1, 1).gen("th", 1, 1, 2).gen("x", 0, 0, 1).precedence({"h", "th", "x"});
    b.rule("x*th", "th*x + h*x*x", "plane");
    EXPECT_TRUE(critical_pairs(b.build()).empty());
}

TEST(CriticalPairs, QPlaneJoinable)
{
    auto pairs = critical_pairs(presets::q_plane());
    EXPECT_EQ(pairs.size(), 3u);
    for (const auto &cp : pairs) {
        EXPECT_TRUE(cp.joinable) << word_text(cp.overlap);
    }
}

// The x th th th overlap of the h-plane leaves a residual because h is free there.
TEST(CriticalPairs, HPlaneOverlapFinding)
{
    presentation H = presets::h_plane();
    auto pairs = critical_pairs(H);
    EXPECT_EQ(pairs.size(), 5u);
    std::size_t bad = 0;
    for (const auto &cp : pairs) {
        if (!cp.joinable) {
            ++bad;
            EXPECT_EQ(cp.overlap, make_word({"x", "th", "th", "th"}));
        }
    }
    EXPECT_EQ(bad, 1u);
}

TEST(Termination, ShippedWeightsPass)
{
    EXPECT_TRUE(check_termination(presets::h_plane()).passed());
    EXPECT_TRUE(check_termination(presets::glhj()).passed());
}

TEST(Termination, HeavierRhsFails)
{
    presentation H = presets::h_plane();
    H.rules.push_back({make_word({"x", "x"}), parse_poly("th*th*x"), "bad"});
    report r = check_termination(H);
    EXPECT_FALSE(r.passed());
}

TEST(Homogeneity, InhomogeneousRuleFails)
{
    presentation H = presets::h_plane();
    H.rules.push_back({make_word({"x", "x"}), parse_poly("th"), "bad"});
    EXPECT_FALSE(check_homogeneity(H).passed());
}
