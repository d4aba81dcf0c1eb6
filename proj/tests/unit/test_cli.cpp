#include <filesystem>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cerf/cli.hpp"

using namespace cerf;

namespace {

const std::string kFixtures = CERF_FIXTURE_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

std::string fx(const std::string& name) { return kFixtures + "/" + name; }

} // namespace

TEST(Cli, ValidateExitCodes) {
    for (const char* ok : {"sphere.json", "torus.json", "genus2.json", "cp2.json", "stdgk_family.json", "two_hexagons.json"})
        EXPECT_EQ(run({"validate", fx(ok)}).code, 0) << ok;
    for (const char* bad : {"bad.json", "dup_height.json", "disconnected.json", "dangling_curve.json", "not_trisection.json"}) {
        const auto r = run({"validate", fx(bad)});
        EXPECT_EQ(r.code, 1) << bad;
        EXPECT_FALSE(r.out.empty()) << bad;
    }
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"enumerate", "quadruple"}).code, 2);
    EXPECT_EQ(run({"validate"}).code, 2);
    EXPECT_EQ(run({"validate", fx("does_not_exist.json")}).code, 1);
}

TEST(Cli, Invariants) {
    const auto r = run({"invariants", "--trisection", fx("cp2.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j, (nlohmann::json{{"chi", 3}, {"sigma", 1}, {"h1_rank", 0}}));
    const auto h = nlohmann::json::parse(run({"invariants", "--heegaard", fx("stdgk_heegaard.json")}).out);
    EXPECT_EQ(h["h1"]["rank"], 2);
}

TEST(Cli, Enumerate) {
    const auto j = nlohmann::json::parse(run({"enumerate", "figure1"}).out);
    EXPECT_EQ(j["count"], 4);
    EXPECT_EQ(j["entries"].size(), 4u);
}

TEST(Cli, CutSystemAndReeb) {
    const auto cs = nlohmann::json::parse(run({"cut-system", fx("genus2.json")}).out);
    EXPECT_EQ(cs["cut_system"].size(), 2u);
    const auto reeb = nlohmann::json::parse(run({"reeb", fx("torus.json")}).out);
    EXPECT_EQ(reeb["betti"], 1);
}

TEST(Cli, InterpolateAndMismatch) {
    EXPECT_EQ(run({"interpolate", fx("slides.json")}).code, 0);
    EXPECT_EQ(run({"interpolate", fx("slides.json"), "--to", "other"}).code, 1);
}

TEST(Cli, CompileAndRender) {
    const auto graphic = run({"compile-trisection", fx("cp2.json")});
    ASSERT_EQ(graphic.code, 0);
    const auto svg = run({"compile-trisection", fx("cp2.json"), "--format", "svg"});
    ASSERT_EQ(svg.code, 0);
    EXPECT_EQ(svg.out.rfind("<svg", 0), 0u);
    std::size_t marks = 0;
    for (std::size_t p = svg.out.find(">T1<"); p != std::string::npos; p = svg.out.find(">T1<", p + 1)) ++marks;
    EXPECT_EQ(marks, 3u);
    const auto hex = run({"render", fx("cp2_cap.json")});
    ASSERT_EQ(hex.code, 0);
    EXPECT_NE(hex.out.find("<svg"), std::string::npos);
}

TEST(Cli, AssembleCommands) {
    const auto s1 = nlohmann::json::parse(run({"assemble-s1", fx("cp2_family.json")}).out);
    EXPECT_EQ(s1["chi"], 3);
    EXPECT_EQ(s1["sigma"], 1);
    const auto b1 = nlohmann::json::parse(run({"assemble-b1", fx("stdgk_b1.json")}).out);
    EXPECT_EQ(b1["surgeries"].size(), 3u);
    EXPECT_EQ(b1["k"], 2);
    const auto b2 = nlohmann::json::parse(run({"assemble-b2", fx("cp2_cap.json")}).out);
    EXPECT_EQ(b2["sigma_identity"], true);
    EXPECT_EQ(run({"assemble-b1", fx("cp2_family.json")}).code, 1);
}

TEST(Cli, OutputFile) {
    const auto path = std::filesystem::temp_directory_path() / "cerf_cli_test_out.json";
    const auto r = run({"enumerate", "figure1", "--output", path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    EXPECT_TRUE(std::filesystem::exists(path));
    std::filesystem::remove(path);
}
