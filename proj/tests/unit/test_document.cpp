#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "cerf/document.hpp"
#include "cerf/error.hpp"

using namespace cerf;

namespace {

const std::filesystem::path kFixtures = CERF_FIXTURE_DIR;

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string code_of(const std::string& text) {
    try {
        parse_document(text);
    } catch (const Error& e) {
        return e.code();
    }
    return "";
}

std::string trisection(const std::string& extra, const std::string& version = "1.0.0") {
    return R"({"format_version":")" + version +
           R"(","kind":"trisection","payload":{"g":1,"k":0,"alpha":[[1,0]],"beta":[[0,1]],"gamma":[[1,1]])" + extra +
           "}}";
}

std::string morse(const std::string& events) {
    return R"({"format_version":"1.0.0","kind":"morse","payload":{"events":[)" + events + "]}}";
}

const std::vector<std::string> kBroken = {"bad.json", "dup_height.json", "dangling_curve.json"};

} // namespace

TEST(Document, FixturesRoundTrip) {
    int seen = 0;
    for (const auto& entry : std::filesystem::directory_iterator(kFixtures)) {
        const auto name = entry.path().filename().string();
        if (entry.path().extension() != ".json" || std::count(kBroken.begin(), kBroken.end(), name)) continue;
        const auto text = slurp(entry.path());
        const auto doc = parse_document(text);
        EXPECT_EQ(parse_document(serialize_document(doc)), doc) << name;
        // census references are expanded on output
        if (text.find("\"census\"") == std::string::npos)
            EXPECT_EQ(serialize_document(doc), text) << name << " is not in canonical form";
        ++seen;
    }
    EXPECT_GT(seen, 15);
}

TEST(Document, AcceptsTrisection) {
    const auto doc = parse_document(trisection(""));
    EXPECT_EQ(doc.kind(), DocumentKind::Trisection);
    EXPECT_EQ(std::get<TrisectionDiagram>(doc.payload).g, 1);
    EXPECT_NO_THROW(parse_document(trisection("", "1.2.0")));
}

TEST(Document, ErrorCodes) {
    EXPECT_EQ(code_of("{"), "MALFORMED_JSON");
    EXPECT_EQ(code_of(trisection("", "2.0.0")), "UNKNOWN_VERSION");
    EXPECT_EQ(code_of(trisection(R"(,"colour":1)")), "UNKNOWN_FIELD");
    EXPECT_EQ(code_of(R"({"format_version":"1.0.0","kind":"knot","payload":{}})"), "UNKNOWN_KIND");
    EXPECT_EQ(code_of(R"({"format_version":"1.0.0","kind":"trisection","payload":{"g":1}})"), "MISSING_FIELD");
    EXPECT_EQ(code_of(R"({"format_version":"1.0.0","kind":"trisection","payload":{"g":"1","k":0,"alpha":[],"beta":[],"gamma":[]}})"),
              "TYPE_MISMATCH");
    EXPECT_EQ(code_of(R"({"format_version":"1.0.0","kind":"trisection","payload":{"g":1,"k":0,"alpha":[[1,0,0]],"beta":[[0,1]],"gamma":[[1,1]]}})"),
              "DIMENSION_MISMATCH");
    EXPECT_EQ(code_of(morse(R"({"kind":"birth","out":1,"height":0.5},{"kind":"death","in":1,"height":"1"})")),
              "NON_EXACT_NUMBER");
    EXPECT_EQ(code_of(morse(R"({"kind":"birth","out":1,"height":"1"},{"kind":"death","in":1,"height":"2/2"})")),
              "DUPLICATE_HEIGHT");
    EXPECT_EQ(code_of(morse(R"({"kind":"birth","out":1,"height":"0"},{"kind":"death","in":2,"height":"1"})")),
              "DANGLING_CIRCLE_ID");
    EXPECT_EQ(code_of(slurp(kFixtures / "dangling_curve.json")), "DANGLING_CURVE_ID");
}

TEST(Document, Canonical) {
    // key order and whitespace of the input do not matter
    const auto a = serialize_document(parse_document(trisection("")));
    const auto b = serialize_document(parse_document(
        R"({ "payload": {"gamma":[[1,1]], "k":0, "g":1, "beta":[[0,1]], "alpha":[[1,0]]}, "kind":"trisection", "format_version":"1.0.0" })"));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.back(), '\n');
}
