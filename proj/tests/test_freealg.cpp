#include <z3calc/presets.hpp>

#include <gtest/gtest.h>

using namespace z3calc;

namespace
{

polynomial P(const std::string &s)
{
    return parse_poly(s);
}

} // namespace

TEST(Word, GradeUsesEffectiveWeight)
{
    presentation C = presets::qjh_calculus();
    EXPECT_EQ(C.gens.grade({}), 0);
    EXPECT_EQ(C.gens.grade(make_word({"dth"})), 2);
    EXPECT_EQ(C.gens.grade(make_word({"h", "x", "x"})), 1);
    EXPECT_EQ(C.gens.grade(make_word({"x", "th"})), 1);
    EXPECT_EQ(C.gens.info(sym("h")).grade, 2);
    EXPECT_EQ(C.gens.info(sym("h")).omega, 1);
    EXPECT_THROW(C.gens.grade(make_word({"w"})), unknown_generator);
}

TEST(Word, ConcatenationAddsGrades)
{
    presentation C = presets::qjh_calculus();
    word a = make_word({"th", "dx"}), b = make_word({"dth", "h"});
    EXPECT_EQ(C.gens.grade(concat(a, b)), mod3(C.gens.grade(a) + C.gens.grade(b)));
}

TEST(Polynomial, ProductIsConcatenation)
{
    EXPECT_EQ(P("x") * P("th"), polynomial(make_word({"x", "th"})));
    EXPECT_EQ((P("x") + P("th")) * P("th"), P("x*th + th*th"));
    EXPECT_EQ(P("h*x") * P("x"), polynomial(make_word({"h", "x", "x"})));
}

TEST(Polynomial, ZeroCoefficientsDropped)
{
    polynomial p = P("x*th") - P("x*th");
    EXPECT_TRUE(p.is_zero());
    EXPECT_EQ(p.size(), 0u);
    EXPECT_EQ(P("j^2*x + j*x + x").size(), 0u);
}

TEST(Hom, CoactionOnSquareExpandsToFourWords)
{
    graded_hom s;
    s.set("x", P("a*x + b*th"));
    polynomial r = s(P("x*x"));
    EXPECT_EQ(r.size(), 4u);
    EXPECT_EQ(r, P("a*x*a*x + a*x*b*th + b*th*a*x + b*th*b*th"));
}

TEST(Hom, IdentityAndComposition)
{
    graded_hom id;
    polynomial p = P("x*th - q*th*x + h*x*x");
    EXPECT_EQ(id(p), p);
    graded_hom s, t;
    s.set("x", P("x + th"));
    t.set("th", P("h*x"));
    graded_hom st;
    st.set("th", s(P("h*x")));
    st.set("x", P("x + th"));
    EXPECT_EQ(s(t(p)), st(p));
}

TEST(Hom, GradePreservation)
{
    presentation C = presets::coaction_plane();
    graded_hom s;
    s.set("x", P("a*x + b*th"));
    s.set("th", P("g*x + dT*th"));
    EXPECT_TRUE(s.grade_violations(C.gens, C.gens).empty());
    s.set("th", P("a*x + dT*th"));
    EXPECT_EQ(s.grade_violations(C.gens, C.gens), std::vector<std::string>{"th"});
}

TEST(Alphabet, DuplicateRejected)
{
    alphabet a;
    a.add({"x", 0, 0, {}, {}, {}});
    EXPECT_THROW(a.add({"x", 0, 0, {}, {}, {}}), algebra_error);
}
