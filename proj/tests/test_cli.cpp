#include <z3calc/cli.hpp>

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

using namespace z3calc;

namespace
{

struct result {
    int code;
    std::string out, err;
};

result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, ReduceHPlane)
{
    auto r = run({"reduce", "--preset", "h_plane", "x*th"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "th*x + h*x*x\n");
}

TEST(Cli, ReduceSpecializedCalculus)
{
    auto r = run({"reduce", "--preset", "qjh_calculus", "--q", "1", "th*dx"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "j*dx*th - j^2*h*dx*x\n");
}

TEST(Cli, ReduceJson)
{
    auto r = run({"reduce", "--preset", "h_plane", "--format", "json", "x*th"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["text"], "th*x + h*x*x");
    EXPECT_EQ(j["normal_form"].size(), 2u);
}

TEST(Cli, ParseErrorReportsOffset)
{
    auto r = run({"reduce", "x*("});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("at offset 3"), std::string::npos) << r.err;
}

TEST(Cli, UnknownGeneratorIsBadInput)
{
    EXPECT_EQ(run({"reduce", "--preset", "h_plane", "dx"}).code, 2);
}

TEST(Cli, UnknownSuiteIsBadInput)
{
    EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
}

TEST(Cli, MissingSubcommandIsBadInput)
{
    EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, BudgetExceededExitCode)
{
    ::setenv("Z3CALC_STEP_BUDGET", "2", 1);
    auto r = run({"reduce", "th*th*x*x*th*dx"});
    ::unsetenv("Z3CALC_STEP_BUDGET");
    EXPECT_EQ(r.code, 3) << r.err;
}

TEST(Cli, VerifyPassingSuite)
{
    auto r = run({"verify", "--suite", "thm3_2"});
    EXPECT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    for (const auto &c : j["checks"]) {
        EXPECT_EQ(c["status"], "pass") << c["name"];
    }
}

TEST(Cli, PairsReportsCount)
{
    auto r = run({"pairs", "--preset", "q_plane"});
    ASSERT_EQ(r.code, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["non_joinable"], 0);
}

TEST(Cli, PresetsExportImport)
{
    auto path = std::filesystem::temp_directory_path() / "z3calc_test_h_plane.json";
    EXPECT_EQ(run({"presets", "export", "h_plane", "-o", path.string()}).code, 0);
    auto r = run({"presets", "import", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("round trip exact"), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Cli, PresetsList)
{
    auto r = run({"presets", "list"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("qjh_calculus\t24 rules"), std::string::npos);
}

TEST(Cli, SdetText)
{
    auto r = run({"sdet"});
    EXPECT_EQ(r.code, 0);
    EXPECT_FALSE(r.out.empty());
}
