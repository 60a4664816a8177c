#include <gtest/gtest.h>

#include <cstdlib>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "jsr/cli.hpp"
#include "jsr/emitters.hpp"
#include "json.hpp"
#include "test_support.hpp"

using test_support::TempDir;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome invoke(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"jsr"};
    storage.insert(storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : storage) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out, err;
    const int code = jsr::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const std::string kExample1 = std::string(JSR_DATA_DIR) + "/example1.json";
const std::string kExample2 = std::string(JSR_DATA_DIR) + "/example2.json";

double field(const std::string& line, const std::string& key) {
    const auto pos = line.find(key + "=");
    const auto end = line.find(' ', pos);
    return jsr::parse_real(line.substr(pos + key.size() + 1, end - pos - key.size() - 1));
}

}  // namespace

TEST(Cli, ComputeExample1) {
    const auto r = invoke({"compute", kExample1});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.rfind("rho_estimate=", 0), 0u);
    EXPECT_NEAR(field(r.out, "rho_estimate"), 1.618, 1e-3);
    EXPECT_LE(field(r.out, "rho_lower"), field(r.out, "rho_upper"));
    EXPECT_NE(r.out.find(" iterations=12 "), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("status=converged\n"), std::string::npos);
}

TEST(Cli, ComputeJsonAndArtifacts) {
    TempDir dir;
    const auto history = dir.file("h.csv").string();
    const auto ball = dir.file("b.csv").string();
    const auto svg = dir.file("f.svg").string();
    const auto r = invoke({"compute", kExample2, "--json", "--history", history, "--ball", ball, "--svg", svg,
                           "--show-images"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["status"], "converged");
    EXPECT_NEAR(doc["rho_estimate"].get<double>(), 1.347, 2e-3);
    EXPECT_EQ(doc["history"].size(), jsr::read_history_csv(history).size());
    EXPECT_EQ(test_support::count_of(test_support::slurp(ball), "\n"), 3001u);
    const auto figure = test_support::slurp(svg);
    EXPECT_EQ(test_support::count_of(figure, "<polygon") + test_support::count_of(figure, "<polyline"), 4u);
}

TEST(Cli, Overrides) {
    const auto r = invoke({"compute", kExample1, "--nodes", "600", "--tol", "1e-2", "--averaging", "harmonic"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_NEAR(field(r.out, "rho_estimate"), 1.618, 1e-2);
    EXPECT_EQ(invoke({"compute", kExample1, "--averaging", "median"}).code, 4);
    EXPECT_EQ(invoke({"compute", kExample1, "--nodes", "601"}).code, 4);
}

TEST(Cli, ReducibleInputExitsTwo) {
    TempDir dir;
    const auto file = dir.write("red.json", R"({"matrices": [[[1, 1], [0, 1]], [[3, 1], [0, 2]]]})");
    const auto r = invoke({"compute", file.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("reducible"), std::string::npos);
    const auto allowed = invoke({"compute", file.string(), "--allow-reducible", "--max-iters", "20"});
    EXPECT_NE(allowed.code, 2);
    EXPECT_NE(allowed.err.find("warning"), std::string::npos);
}

TEST(Cli, MaxIterationsExitsThreeAndWritesHistory) {
    TempDir dir;
    const auto history = dir.file("h.csv").string();
    const auto r = invoke({"compute", kExample1, "--max-iters", "2", "--history", history});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.out.find("status=max_iters_exceeded"), std::string::npos);
    EXPECT_EQ(jsr::read_history_csv(history).size(), 3u);
}

TEST(Cli, InputErrorsExitFour) {
    TempDir dir;
    EXPECT_EQ(invoke({"compute", dir.file("missing.json").string()}).code, 4);
    const auto bad = dir.write("bad.json", R"({"matrices": [[[1, 0, 0], [0, 1, 0], [0, 0, 1]]]})");
    const auto r = invoke({"compute", bad.string()});
    EXPECT_EQ(r.code, 4);
    EXPECT_NE(r.err.find("matrices[0]"), std::string::npos);
    EXPECT_EQ(invoke({"compute"}).code, 4);
    EXPECT_EQ(invoke({"frobnicate"}).code, 4);
    EXPECT_EQ(invoke({"compute", kExample1, "--svg", dir.file("no/such/dir/f.svg").string()}).code, 4);
}

TEST(Cli, Bounds) {
    const auto two = invoke({"bounds", kExample1, "--length", "2"});
    EXPECT_EQ(two.code, 0) << two.err;
    EXPECT_NEAR(field(two.out, "lower"), 1.61803, 1e-5);
    const auto one = invoke({"bounds", kExample1, "--length", "1"});
    EXPECT_EQ(field(one.out, "lower"), 1.0);
    EXPECT_NEAR(field(one.out, "upper"), 1.61803, 1e-5);
    EXPECT_NE(one.out.find("products=2"), std::string::npos);

    TempDir dir;
    const auto identity = dir.write("id.json", R"({"matrices": [[[1, 0], [0, 1]]]})");
    const auto id = invoke({"bounds", identity.string(), "--length", "5"});
    EXPECT_EQ(field(id.out, "lower"), 1.0);
    EXPECT_EQ(field(id.out, "upper"), 1.0);
}

TEST(Cli, BoundsCapFromEnvironment) {
    EXPECT_EQ(invoke({"bounds", kExample1, "--length", "21"}).code, 4);
    ::setenv("JSR_PRODUCT_CAP", "8", 1);
    const auto capped = invoke({"bounds", kExample1, "--length", "4"});
    EXPECT_EQ(capped.code, 4);
    EXPECT_NE(capped.err.find("16"), std::string::npos);
    EXPECT_EQ(invoke({"bounds", kExample1, "--length", "3"}).code, 0);
    ::setenv("JSR_PRODUCT_CAP", "lots", 1);
    EXPECT_EQ(invoke({"bounds", kExample1, "--length", "3"}).code, 4);
    ::unsetenv("JSR_PRODUCT_CAP");
    EXPECT_EQ(invoke({"bounds", kExample1, "--length", "0"}).code, 4);
}
