#include <z3calc/supergroup.hpp>

#include <gtest/gtest.h>

using namespace z3calc;

TEST(Coaction, GeneratorImages)
{
    EXPECT_EQ(coact_plane(parse_poly("x")), parse_poly("a*x + b*th"));
    EXPECT_EQ(coact_plane(parse_poly("th")), parse_poly("g*x + dT*th"));
    EXPECT_EQ(coact_plane(parse_poly("h")), parse_poly("h"));
}

TEST(Coaction, SquareHasFourWords)
{
    EXPECT_EQ(coact_plane(parse_poly("x*x")).size(), 4u);
}

TEST(Coaction, DualImages)
{
    EXPECT_EQ(coact_dual(parse_poly("phi")), parse_poly("a*phi + j^2*b*y"));
    EXPECT_EQ(coact_dual(parse_poly("y")), parse_poly("j*g*phi + dT*y"));
}

TEST(Supermatrix, IdentityProduct)
{
    super_matrix I{{{polynomial(1), polynomial()}, {polynomial(), polynomial(1)}}};
    super_matrix T = generic_matrix();
    auto R = multiply(T, I);
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            EXPECT_EQ(R[r][c], T[r][c]);
        }
    }
}

TEST(Supermatrix, RelationsPresentInCoactionPresets)
{
    presentation P = presets::coaction_plane();
    for (const auto &lhs : supermatrix_relations()) {
        word w = parse_poly(lhs).terms().begin()->first;
        EXPECT_NE(P.find_rule(w), nullptr) << lhs;
    }
}

TEST(Comodule, DualCubeVanishes)
{
    presentation D = presets::coaction_dual();
    EXPECT_TRUE(normal_form(coact_dual(parse_poly("phi*phi*phi")), D).is_zero());
}

TEST(Inverse, DiagonalSpecialization)
{
    presentation L = presets::glhj_loc();
    reducer red(L);
    graded_hom diag = killing({"b", "g", "h"});
    auto Ti = t_inverse_raw();
    EXPECT_EQ(red.normal_form(diag(Ti[0][0])), parse_poly("ainv"));
    EXPECT_EQ(red.normal_form(diag(Ti[1][1])), parse_poly("dTinv"));
    EXPECT_TRUE(red.normal_form(diag(Ti[0][1])).is_zero());
}

TEST(Sdet, SuitePasses)
{
    EXPECT_TRUE(verify_sdet().passed());
}

TEST(Localization, InverseCancels)
{
    presentation L = presets::glhj_loc();
    EXPECT_EQ(normal_form(parse_poly("a*ainv"), L), parse_poly("1"));
    EXPECT_EQ(normal_form(parse_poly("dTinv*dT"), L), parse_poly("1"));
}
