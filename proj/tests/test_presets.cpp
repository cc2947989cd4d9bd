#include <z3calc/suites.hpp>

#include <gtest/gtest.h>

using namespace z3calc;

TEST(Presets, EveryPresetValidates)
{
    for (const auto &n : presets::names()) {
        report r = validate(build(n));
        for (const auto &c : r.checks) {
            if (c.pass) {
                continue;
            }
            ADD_FAILURE() << n << ": " << c.name << (c.witness ? ": " + *c.witness : "");
        }
    }
}

TEST(Presets, UnknownNameThrows)
{
    EXPECT_THROW(build("no_such_preset"), algebra_error);
}

TEST(Presets, RuleCounts)
{
    EXPECT_EQ(presets::q_plane().rules.size(), 2u);
    EXPECT_EQ(presets::h_plane().rules.size(), 3u);
    EXPECT_EQ(presets::qjh_calculus().rules.size(), 24u);
    EXPECT_EQ(presets::hj_calculus().rules.size(), 24u);
}

TEST(Presets, SpecializedCalculusMatchesQEqualsOneTranscription)
{
    presentation a = specialize(presets::qjh_calculus(), rational(1));
    presentation b = presets::hj_calculus();
    EXPECT_TRUE(rule_differences(a, b).empty());
}

TEST(Presets, SpecializeRejectsPole)
{
    // A rule coefficient 1/(q-1) has no value at q = 1.
    preset_builder b("pole");
    b.gen("x", 0, 0, 1).gen("y", 0, 0, 1).precedence({"x", "y"});
    b.rule("y*x", "1/(q - 1)*x*y", "pole");
    EXPECT_THROW(specialize(b.build(), rational(1)), pole_error);
}

TEST(Contraction, AllIdentitiesHold)
{
    report r = verify_contraction();
    for (const auto &c : r.checks) {
        if (c.pass) {
            continue;
        }
        ADD_FAILURE() << c.name << (c.witness ? ": " + *c.witness : "");
    }
    EXPECT_GE(r.checks.size(), 10u);
}

TEST(PresetJson, RoundTripIsByteIdentical)
{
    for (const auto &n : presets::names()) {
        std::string text = export_preset(build(n));
        EXPECT_EQ(export_preset(import_preset(text)), text) << n;
    }
}

TEST(PresetJson, ImportedPresetReducesLikeOriginal)
{
    presentation P = presets::qjh_calculus();
    presentation Q = import_preset(export_preset(P));
    polynomial p = parse_poly("dx*dth*x*th + th*dx*h");
    EXPECT_EQ(normal_form(p, P), normal_form(p, Q));
}

TEST(PresetJson, MalformedInputRejected)
{
    EXPECT_THROW(import_preset("{"), preset_error);
    EXPECT_THROW(import_preset("{\"name\": \"x\"}"), preset_error);
}

TEST(PresetJson, InhomogeneousImportRejected)
{
    auto j = to_json(presets::h_plane());
    j["rules"][0]["rhs"] = poly_to_json(parse_poly("th*x"), presets::h_plane().order);
    j["rules"][0]["rhs"] = poly_to_json(parse_poly("th*x + x"), presets::h_plane().order);
    EXPECT_THROW(presentation_from_json(j), preset_error);
}

TEST(Census, CalculusHasManyPairs)
{
    auto pairs = critical_pairs(presets::qjh_calculus());
    EXPECT_GT(pairs.size(), 50u);
}
