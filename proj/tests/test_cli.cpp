#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "pseries/cli.hpp"

using namespace pseries;

namespace {

struct Run {
    int rc;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int rc = run_cli(args, out, err);
    return {rc, out.str(), err.str()};
}

}  // namespace

TEST(Cli, RingInfo) {
    auto r = run({"ring-info", "--ring", "Z/6", "--format", "json"});
    ASSERT_EQ(r.rc, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ring"], "Z/2 x Z/3");
    EXPECT_EQ(j["units"], 2);
    EXPECT_EQ(j["factors"].size(), 2u);

    j = nlohmann::json::parse(run({"ring-info", "--ring", "GF(3,2)", "--format", "json"}).out);
    EXPECT_EQ(j["units"], 8);
    EXPECT_EQ(j["exponent"], 8);

    j = nlohmann::json::parse(run({"ring-info", "--ring", "Z/4", "--format", "json"}).out);
    EXPECT_EQ(j["factors"][0]["residue_field"], "F_2");
    EXPECT_EQ(j["factors"][0]["is_field"], false);

    r = run({"ring-info", "--ring", "Z/4"});
    EXPECT_NE(r.out.find("residue field F_2"), std::string::npos);
}

TEST(Cli, ParseErrorsExitTwo) {
    auto r = run({"verify", "--ring", "Z/1", "-n", "2"});
    EXPECT_EQ(r.rc, 2);
    EXPECT_NE(r.err.find("position"), std::string::npos);
    EXPECT_EQ(run({"verify", "--ring", "Z/4"}).rc, 2);
    EXPECT_EQ(run({"frobnicate"}).rc, 2);
    EXPECT_EQ(run({"verify", "--ring", "Z/4", "-n", "0"}).rc, 2);
    EXPECT_EQ(run({"verify", "--ring", "Z/4", "-n", "2", "--format", "xml"}).rc, 2);
    EXPECT_EQ(run({"verify", "--ring", "Z/4", "-n", "2", "--only", "bogus"}).rc, 2);
    EXPECT_EQ(run({"--help"}).rc, 0);
}

TEST(Cli, SizeGuardExitThree) {
    EXPECT_EQ(run({"verify", "--ring", "Z/4", "-n", "2", "--max-group", "10"}).rc, 3);
    EXPECT_EQ(run({"intertwine", "--ring", "Z/6", "-n", "3"}).rc, 3);
    EXPECT_EQ(run({"verify", "--ring", "GF(3,1)", "-n", "2", "--max-order", "40"}).rc, 3);
}

TEST(Cli, VerifyAllPass) {
    auto r = run({"verify", "--ring", "Z/4", "-n", "2", "--format", "json"});
    ASSERT_EQ(r.rc, 0) << r.out << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["summary"]["status"], "pass");
    EXPECT_EQ(j["checks"].size(), 19u);
    EXPECT_EQ(j["seed"], 1);
    for (const auto& c : j["checks"]) EXPECT_TRUE(c["millis"].is_null());

    r = run({"verify", "--ring", "GF(2,1)", "-n", "3"});
    EXPECT_EQ(r.rc, 0);
    EXPECT_NE(r.out.find("19/19 checks passed"), std::string::npos);
}

TEST(Cli, VerifySelectionAndTiming) {
    auto r = run({"verify", "--ring", "GF(3,1)", "-n", "2", "--only", "ulv-injective,intertwining", "--skip",
                  "intertwining", "--format", "json", "--timing", "--seed", "9"});
    ASSERT_EQ(r.rc, 0);
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["checks"].size(), 1u);
    EXPECT_EQ(j["checks"][0]["id"], "ulv-injective");
    EXPECT_TRUE(j["checks"][0]["millis"].is_number());
    EXPECT_EQ(j["seed"], 9);

    r = run({"verify", "--ring", "GF(3,1)", "-n", "2", "--only", "independence", "--format", "csv"});
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "id,status,expected,actual");
    EXPECT_NE(r.out.find("independence,pass,"), std::string::npos);
}

TEST(Cli, JsonIsByteIdentical) {
    const std::vector<std::string> args{"verify", "--ring", "GF(3,1)", "-n", "2", "--format", "json", "--seed", "5"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, Intertwine) {
    auto r = run({"intertwine", "--ring", "GF(3,1)", "-n", "2", "--format", "json"});
    ASSERT_EQ(r.rc, 0);
    auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["formula"].size(), 4u);
    std::vector<std::size_t> diag;
    for (std::size_t i = 0; i < 4; ++i) diag.push_back(j["formula"][i][i]);
    EXPECT_EQ(diag, (std::vector<std::size_t>{2, 1, 1, 2}));
    EXPECT_EQ(j["formula"], j["oracle"]);

    j = nlohmann::json::parse(run({"intertwine", "--ring", "GF(2,1)", "-n", "2", "--format", "json"}).out);
    EXPECT_EQ(j["formula"], nlohmann::json::parse("[[2]]"));

    j = nlohmann::json::parse(run({"intertwine", "--ring", "Z/4", "-n", "1", "--format", "json"}).out);
    EXPECT_EQ(j["oracle"], nlohmann::json::parse("[[1,0],[0,1]]"));

    r = run({"intertwine", "--ring", "Z/4", "-n", "1", "--format", "csv"});
    EXPECT_EQ(r.out, "chi,sigma,formula,oracle,characters\n[0],[0],1,1,1\n[0],[1],0,0,0\n[1],[0],0,0,0\n[1],[1],1,1,1\n");
}

TEST(Cli, Count) {
    auto j = nlohmann::json::parse(run({"count", "--ring", "Z/4", "-n", "2", "--format", "json"}).out);
    EXPECT_EQ(j["formula"], "5");
    EXPECT_EQ(j["pipeline"], "5");
    EXPECT_EQ(j["agree"], true);

    auto r = run({"count", "--ring", "Z/6", "-n", "3", "--format", "json"});
    ASSERT_EQ(r.rc, 0);
    j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["formula"], "30");
    EXPECT_TRUE(j["pipeline"].is_null());

    j = nlohmann::json::parse(run({"count", "--ring", "GF(7,1)", "-n", "1", "--format", "json", "--formula-only"}).out);
    EXPECT_EQ(j["formula"], "6");
    for (const char* ring : {"Z/9", "Z/2 x GF(2,2)", "Z/12"}) {
        j = nlohmann::json::parse(run({"count", "--ring", ring, "-n", "1", "--format", "json"}).out);
        const auto units = nlohmann::json::parse(run({"ring-info", "--ring", ring, "--format", "json"}).out)["units"];
        EXPECT_EQ(j["formula"], std::to_string(units.get<int>())) << ring;
        EXPECT_EQ(j["pipeline"], j["formula"]) << ring;
    }
}
