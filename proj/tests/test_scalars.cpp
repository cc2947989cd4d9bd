#include <z3calc/parser.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace z3calc;

namespace
{

const scalar q = scalar::q();
const scalar j = scalar::j();

scalar random_scalar(std::mt19937 &rng)
{
    std::uniform_int_distribution<int> c(-4, 4), deg(0, 2);
    auto poly = [&] {
        std::vector<cyclotomic> cs;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) {
            cs.emplace_back(rational(c(rng)), rational(c(rng)));
        }
        return qpoly(cs);
    };
    qpoly den = poly();
    while (den.is_zero()) {
        den = poly();
    }
    return scalar(poly(), den);
}

} // namespace

TEST(Cyclotomic, MinimalPolynomial)
{
    EXPECT_TRUE((j * j + j + scalar(1)).is_zero());
    EXPECT_EQ(j * j, scalar(-1) - j);
    EXPECT_EQ((j + scalar(1)) * (j + scalar(1)), j);
    EXPECT_EQ(j.pow(3), scalar(1));
    EXPECT_EQ(j.pow(-1), j * j);
}

TEST(Cyclotomic, InverseViaConjugate)
{
    cyclotomic a(rational(3), rational(-2));
    EXPECT_EQ(a * a.inverse(), cyclotomic(1));
    EXPECT_THROW(cyclotomic().inverse(), division_by_zero);
}

TEST(Scalar, CancelsCommonFactors)
{
    scalar r = (q * q - scalar(1)) / (q - scalar(1));
    EXPECT_EQ(r, q + scalar(1));
    EXPECT_TRUE(r.den().is_one());
}

TEST(Scalar, CanonicalRepresentation)
{
    scalar a = (scalar(2) * q + scalar(2)) / (scalar(4) * q * q - scalar(4));
    scalar b = scalar(1) / (scalar(2) * q - scalar(2));
    EXPECT_EQ(a.num(), b.num());
    EXPECT_EQ(a.den(), b.den());
    EXPECT_TRUE(a.den().lead().is_one());
    EXPECT_EQ(to_string(a), to_string(b));
}

TEST(Scalar, DivisionByZero)
{
    EXPECT_THROW(scalar(1) / scalar(0), division_by_zero);
    EXPECT_THROW(scalar(0).inverse(), division_by_zero);
    EXPECT_THROW(scalar(qpoly(cyclotomic(1)), qpoly()), division_by_zero);
}

TEST(Scalar, SpecializeQ)
{
    EXPECT_EQ((q * j).specialize_q(1), j);
    EXPECT_EQ((j * q.inverse()).specialize_q(1), j);
    EXPECT_EQ((q * q + j).specialize_q(rational(1, 2)), scalar(rational(1, 4)) + j);
    EXPECT_THROW((q - scalar(1)).inverse().specialize_q(1), pole_error);
}

TEST(Scalar, FieldAxiomsOnRandomSamples)
{
    std::mt19937 rng(11);
    for (int i = 0; i < 200; ++i) {
        scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ((a * b) * c, a * (b * c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), scalar(1));
        }
    }
}

TEST(Scalar, NormalizeIsIdempotent)
{
    std::mt19937 rng(5);
    for (int i = 0; i < 50; ++i) {
        scalar a = random_scalar(rng);
        scalar again(a.num(), a.den());
        EXPECT_EQ(again.num(), a.num());
        EXPECT_EQ(again.den(), a.den());
    }
}

TEST(Scalar, TextRoundTrip)
{
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        scalar a = random_scalar(rng);
        EXPECT_EQ(parse_scalar(to_string(a)), a) << to_string(a);
    }
}

TEST(Scalar, Printing)
{
    EXPECT_EQ(to_string(j * j), "j^2");
    EXPECT_EQ(to_string(q * j), "j*q");
    EXPECT_EQ(to_string(q.inverse()), "1/q");
    EXPECT_EQ(to_string(scalar(0)), "0");
}
