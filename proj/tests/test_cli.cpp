#include <gtest/gtest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run {
    int status;
    std::string out;
};

Run run(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = "env -u SOURCE_DATE_EPOCH " + std::string(LRBQ_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int raw = pclose(pipe);
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

TEST(Cli, MinpolyText) {
    const auto r = run("minpoly --n 3");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("X(X-1)(X-2)(X-3): minimal — PASS"), std::string::npos) << r.out;
}

TEST(Cli, SpectrumJson) {
    const auto r = run("spectrum --n 2 --format json");
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j.at("eigenvalues")[0].at("schur"), "s(2)+s(1,1)");
    EXPECT_TRUE(j.contains("tool_version"));
    EXPECT_TRUE(j.contains("invocation"));
    EXPECT_TRUE(j.contains("timestamp"));
}

TEST(Cli, TimestampFollowsSourceDateEpoch) {
    const auto a = json::parse(run("stirling --n 2 --format json").out);
    EXPECT_TRUE(a.at("timestamp").is_null());
    const auto b = json::parse(run("stirling --n 2 --format json").out);
    EXPECT_EQ(a, b);
    const std::string cmd = "SOURCE_DATE_EPOCH=0 " + std::string(LRBQ_CLI_PATH) + " stirling --n 1 --format json";
    FILE* pipe = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    EXPECT_EQ(json::parse(out).at("timestamp"), "1970-01-01T00:00:00Z");
}

TEST(Cli, SpectrumCsvFlagsStratum) {
    const auto r = run("spectrum --n 2 --q 2 --space stratum:1 --format csv");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("j,eigenvalue,dim", 0), 0u);
}

TEST(Cli, DerangementDefinitions) {
    const auto j = json::parse(run("dsf --n 4 --defs ABCDEFG --format json").out);
    EXPECT_TRUE(j.at("agree").get<bool>());
    EXPECT_EQ(j.at("schur"), "s(3,1)+s(2,2)+s(2,1,1)+s(1,1,1,1)");
    EXPECT_EQ(j.at("derangements"), 9);
}

TEST(Cli, RandomToTopAndInvariants) {
    EXPECT_EQ(run("rtt --n 4").status, 0);
    const auto r = run("invariants --n 2 --format csv");
    EXPECT_EQ(r.out, "0,0,0\n1,1,0\n0,1,2\n");
}

TEST(Cli, VerifySubsetJson) {
    const auto r = run("verify --checks 2,7 --format json");
    ASSERT_EQ(r.status, 0);
    const auto j = json::parse(r.out);
    ASSERT_EQ(j.at("criteria").size(), 2u);
    for (const auto& c : j.at("criteria")) {
        EXPECT_TRUE(c.at("pass").get<bool>());
        for (const auto& k : c.at("checks")) {
            EXPECT_TRUE(k.contains("expected"));
            EXPECT_TRUE(k.contains("actual"));
        }
    }
}

TEST(Cli, OutputFile) {
    const std::string path = testing::TempDir() + "lrbq_out.json";
    ASSERT_EQ(run("minpoly --n 2 --format json --out " + path).status, 0);
    std::ifstream f(path);
    const auto j = json::parse(f);
    EXPECT_EQ(j.at("polynomial"), "X(X-1)(X-2)");
}

TEST(Cli, BadArgumentsExitTwo) {
    EXPECT_EQ(run("").status, 2);
    EXPECT_EQ(run("frobnicate").status, 2);
    EXPECT_EQ(run("spectrum --n 3 --format xml").status, 2);
    EXPECT_EQ(run("spectrum --n 3 --space nowhere").status, 2);
    EXPECT_EQ(run("minpoly --n 9").status, 2);
    EXPECT_EQ(run("dsf --n 3 --defs AZ").status, 2);
    const auto r = run("spectrum --n 3 --space nowhere", true);
    EXPECT_NE(r.out.find("Usage"), std::string::npos);
}
