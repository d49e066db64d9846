#include <cstdio>
#include <fstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "support.hpp"

namespace {

std::string cli(const std::string& args) { return std::string(KOHNERT_CLI) + " " + args; }

std::string temp_file(const std::string& name, const std::string& content) {
    const std::string path = ::testing::TempDir() + name;
    std::ofstream(path) << content;
    return path;
}

} // namespace

TEST(Cli, ShowKeyDiagram) {
    const auto r = support::run(cli("show --alpha 1,1,3,2"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "OO.\nOOO\nO..\nO..\n"
                     R"({"cells":[[1,1],[2,1],[3,1],[3,2],[3,3],[4,1],[4,2]],"ghosts":[]})"
                     "\n");
}

TEST(Cli, ShowPermutationAndGridFromStdin) {
    EXPECT_EQ(support::run(cli("show --perm [4,2,5,3,1]")).out.substr(0, 16), "O..\nO.O\nO..\nOOO\n");
    const auto r = support::run("printf 'X.\\nOO\\n' | " + cli("show --grid -"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.substr(0, 6), "X.\nOO\n");
}

TEST(Cli, PolynomialFamilies) {
    EXPECT_EQ(support::run(cli("poly --family key --alpha 0,2")).out, "x1^2 + x1*x2 + x2^2\n");
    EXPECT_EQ(support::run(cli("poly --family lascoux --alpha 0,1")).out, "x1 + x2 - x1*x2\n");
    EXPECT_EQ(support::run(cli("poly --family ghost --alpha 0,1")).out, "x2 - x1*x2\n");
    EXPECT_EQ(support::run(cli("poly --family lascoux --alpha 0,1 --at 1,1")).out, "1\n");
    EXPECT_EQ(support::run(cli("poly --family key --alpha 0,1 --format json")).out,
              R"({"terms":[{"coef":1,"exp":[1]},{"coef":1,"exp":[0,1]}]})"
              "\n");
    EXPECT_EQ(support::run(cli("poly --family key --alpha 0,1 --at 1")).status, 2);
    EXPECT_EQ(support::run(cli("poly --family key --perm [2,1]")).status, 2);
}

TEST(Cli, PosetReportAndStrictBounded) {
    const std::string grid = temp_file("not_bounded.txt", ".O.\n.OO\n...\n...\n");
    auto r = support::run(cli("poset --check all --grid " + grid));
    EXPECT_EQ(r.status, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("bounded"), false);
    EXPECT_EQ(j.at("free_cell_columns"), nlohmann::json::array({2, 3}));
    EXPECT_EQ(support::run(cli("poset --check all --strict-bounded --grid " + grid)).status, 1);
    r = support::run(cli("poset --check bounded --grid " + grid));
    EXPECT_FALSE(nlohmann::json::parse(r.out).contains("lattice"));
    EXPECT_EQ(support::run(cli("poset --strict-bounded --alpha 2")).status, 0);
}

TEST(Cli, ClosureAndHasse) {
    auto r = support::run(cli("closure --moves both --alpha 0,1"));
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(nlohmann::json::parse(r.out).at("nodes").size(), 3U);
    r = support::run(cli("hasse --covers --alpha 0,1"));
    EXPECT_EQ(r.out, "{\"covers\":[[0,1]],\"elements\":2}\n");
    r = support::run(cli("hasse --dot --alpha 0,1"));
    EXPECT_NE(r.out.find("digraph hasse {"), std::string::npos);
    EXPECT_NE(r.out.find("n0 -> n1;"), std::string::npos);
    const std::string out = ::testing::TempDir() + "closure.json";
    // ghost moves by default: the second cell of row 2 drops, leaving a ghost
    EXPECT_EQ(support::run(cli("closure --alpha 0,2 --out " + out)).status, 0);
    std::ifstream in(out);
    EXPECT_EQ(nlohmann::json::parse(in).at("nodes").size(), 2U);
}

TEST(Cli, JsonSeed) {
    const std::string path = temp_file("seed.json", R"({"cells":[[2,1]],"ghosts":[]})");
    EXPECT_EQ(support::run(cli("poly --family ghost --json " + path)).out, "x2 - x1*x2\n");
    EXPECT_EQ(support::run(cli("show --json " + temp_file("bad.json", "{nope"))).status, 2);
}

TEST(Cli, NodeCap) {
    EXPECT_EQ(support::run(cli("--node-cap 2 closure --moves both --alpha 0,1")).status, 1);
    EXPECT_EQ(support::run("KOHNERT_NODE_CAP=2 " + cli("closure --moves both --alpha 0,1")).status, 1);
    EXPECT_EQ(support::run("KOHNERT_NODE_CAP=3 " + cli("closure --moves both --alpha 0,1")).status, 0);
    EXPECT_EQ(support::run("KOHNERT_NODE_CAP=x " + cli("closure --alpha 0,1")).status, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(support::run(cli("")).status, 2);
    EXPECT_EQ(support::run(cli("frobnicate")).status, 2);
    EXPECT_EQ(support::run(cli("show")).status, 2);
    EXPECT_EQ(support::run(cli("show --alpha 1 --perm [1]")).status, 2);
    EXPECT_EQ(support::run(cli("show --alpha x")).status, 2);
    EXPECT_EQ(support::run(cli("closure --moves sideways --alpha 1")).status, 2);
    EXPECT_EQ(support::run(cli("show --grid /nonexistent/file")).status, 2);
    EXPECT_EQ(support::run(cli("show --grid " + temp_file("bad.txt", "O?\n"))).status, 2);
    EXPECT_EQ(support::run(cli("--help")).status, 0);
}

TEST(Cli, ScanIsByteStableWithoutTiming) {
    const auto a = support::run(cli("scan --rows 3 --cols 3 --cells 3 --no-timing"));
    const auto b = support::run(cli("scan --rows 3 --cols 3 --cells 3 --no-timing --threads 1"));
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(nlohmann::json::parse(a.out).at("seeds"), 130);
    EXPECT_TRUE(nlohmann::json::parse(support::run(cli("scan --rows 2 --cols 2 --cells 1")).out).contains("elapsed_ms"));
}
