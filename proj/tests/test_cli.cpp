#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "kinv");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = kinv::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    const Result r = run(std::move(args));
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("schema"), 1);
    return j;
}

}  // namespace

TEST(Cli, AlexanderText) {
    const Result r = run({"alexander", "4_1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "-1*t^-1 + 3 - 1*t^1\n");
    EXPECT_EQ(run({"alexander", "1 1 1"}).out, run({"alexander", "3_1"}).out);
}

TEST(Cli, InvariantJson) {
    const auto j = run_json({"invariant", "4_1", "--n", "3", "--json"});
    EXPECT_EQ(j.at("value"), 16);
    EXPECT_EQ(j.at("sign_determined"), true);
    const auto t = run_json({"--json", "invariant", "3_1", "-N", "6"});
    EXPECT_EQ(t.at("value"), 0);
    EXPECT_EQ(t.at("degenerate"), true);
    EXPECT_EQ(run({"invariant", "3_1", "--n", "2"}).out, "3 (magnitude; sign not determined)\n");
}

TEST(Cli, HomologyAndRepvar) {
    EXPECT_EQ(run({"homology", "4_1", "--n", "3"}).out, "Z/4 + Z/4\n");
    const auto j = run_json({"repvar", "4_1", "--n", "3", "--json"});
    EXPECT_EQ(j.at("t3_points"), 3);
    EXPECT_EQ(j.at("kernel_count"), 16);
    EXPECT_EQ(j.at("wirtinger_count"), 16);
    EXPECT_EQ(j.at("cs_ladder").at("d_loop"), 12);
    const auto d = run_json({"repvar", "3_1", "--n", "6", "--json"});
    EXPECT_EQ(d.at("kernel_count"), "infinite");
    EXPECT_EQ(d.at("wirtinger_count"), "infinite");
}

TEST(Cli, SeriesUsesRationalStrings) {
    const auto j = run_json({"series", "4_1", "--q-h", "0", "--f-h", "1", "--order", "4", "--json"});
    EXPECT_EQ(j.at("coeffs"), nlohmann::json({"1/1", "0/1", "-4/1", "0/1", "-4/3"}));
    const Result r = run({"series", "unknot", "-Q", "2", "-F", "1/2", "--order", "2"});
    EXPECT_EQ(r.out, "s^0: 1/1\ns^1: 0/1\ns^2: 1/1\n");
}

TEST(Cli, MahlerCsv) {
    const Result r = run({"mahler", "4_1", "--n-max", "9", "--csv"});
    EXPECT_EQ(r.code, 0);
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line.rfind("# mahler_roots=", 0), 0u);
    std::getline(in, line);
    EXPECT_EQ(line, "N,q_N,log_q_over_N,log_alpha,difference,degenerate");
    std::getline(in, line);
    EXPECT_EQ(line.substr(0, 5), "3,16,");
    int rows = 1;
    while (std::getline(in, line)) ++rows;
    EXPECT_EQ(rows, 4);
}

TEST(Cli, DimK3) {
    const auto j = run_json({"dim", "--k3", "--n", "4", "--json"});
    EXPECT_EQ(j.at("kappa"), "15/4");
    EXPECT_EQ(j.at("dim"), 0);
    const Result r = run({"dim", "--n", "2", "--c2", "1", "--c1-sq", "0", "--b2-plus", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({"invariant", "3_1", "--n", "1"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    const Result bad = run({"alexander", "1 1"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.err.rfind("error: NotAKnot:", 0), 0u);
    EXPECT_EQ(run({"alexander", "9_42"}).code, 1);
}

TEST(Cli, TableOverride) {
    const std::string path = ::testing::TempDir() + "kinv_table_test.txt";
    {
        std::ofstream f(path);
        f << "mytrefoil: 1 1 1\n";
    }
    const Result r = run({"alexander", "mytrefoil", "--table", path});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, run({"alexander", "3_1"}).out);
    EXPECT_EQ(run({"alexander", "mytrefoil"}).code, 1);
    std::remove(path.c_str());
}

TEST(Cli, Selftest) {
    const Result r = run({"selftest"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
}
