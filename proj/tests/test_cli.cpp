#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#ifndef MASSGATE_CLI
#error "MASSGATE_CLI must point at the massgate executable"
#endif

namespace {

namespace fs = std::filesystem;

struct Result {
    int status;
    std::string out;
    std::string err;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               (std::string("massgate_cli_") + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path write_config(const std::string& name, const std::string& body) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << body;
        return p;
    }

    Result invoke(const std::string& args, const std::string& env = "") {
        const fs::path out = dir_ / "stdout.txt";
        const fs::path err = dir_ / "stderr.txt";
        const std::string cmd = env + " " + MASSGATE_CLI + " " + args + " >" + out.string() + " 2>" + err.string();
        const int raw = std::system(cmd.c_str());
        return Result{WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
    }

    fs::path dir_;
};

constexpr const char* kTable = R"({"m":0.1,"M":0.2,"alpha":0.05,"horizon":10,"J":50,"N":200})";

TEST_F(Cli, RunWritesAllFiles) {
    const auto cfg = write_config("cfg.json", kTable);
    const auto r = invoke("run --config " + cfg.string() + " --out " + (dir_ / "out").string());
    ASSERT_EQ(r.status, 0) << r.err;
    for (const char* f : {"switches.csv", "mass.csv", "snapshots.csv", "report.json", "config.json"}) {
        EXPECT_TRUE(fs::exists(dir_ / "out" / f)) << f;
    }
    EXPECT_NE(r.out.find("1,1.9500000000,2.0000000000,-0.0500000000,0.05,false"), std::string::npos);
}

TEST_F(Cli, OverridesApply) {
    const auto cfg = write_config("cfg.json", kTable);
    const auto r = invoke("run --config " + cfg.string() + " --out " + (dir_ / "out").string() +
                          " --set quadrature=riemann --set snapshot_stride=100");
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("1,2.0000000000,2.0000000000,0.0000000000,0.05,true"), std::string::npos) << r.out;
    const auto saved = nlohmann::json::parse(slurp(dir_ / "out" / "config.json"));
    EXPECT_EQ(saved["quadrature"], "riemann");
    EXPECT_EQ(saved["snapshot_stride"], 100);
}

TEST_F(Cli, OraclePrintsSwitchTable) {
    const auto cfg = write_config("cfg.json", kTable);
    const auto r = invoke("oracle --config " + cfg.string());
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out.rfind("k,t_k,mass\n1,2.0000000000,0.2000000000\n2,3.0000000000,0.1000000000\n", 0), 0u) << r.out;
    EXPECT_NE(r.out.find("9,10.0000000000,0.2000000000"), std::string::npos);
    EXPECT_EQ(r.out.find("\n10,"), std::string::npos);
}

TEST_F(Cli, CompareReportsTrapezoidViolationWithoutFailing) {
    const auto cfg = write_config("cfg.json", kTable);
    const auto r = invoke("compare --config " + cfg.string() + " --out " + (dir_ / "cmp").string());
    ASSERT_EQ(r.status, 0) << r.err;
    const std::string trap = slurp(dir_ / "cmp" / "trapezoid" / "switches.csv");
    EXPECT_NE(trap.find("1,1.9500000000,2.0000000000,-0.0500000000,0.05,false"), std::string::npos);
    const auto doc = nlohmann::json::parse(slurp(dir_ / "cmp" / "compare.json"));
    EXPECT_EQ(doc["trapezoid"]["switches"][0]["within_bound"], false);
    EXPECT_EQ(doc["riemann"]["summary"]["all_within_bound"], true);
    EXPECT_TRUE(fs::exists(dir_ / "cmp" / "compare.csv"));
}

TEST_F(Cli, SweepWritesTable) {
    const auto cfg = write_config("cfg.json", kTable);
    const auto r = invoke("sweep --config " + cfg.string() + " --n-list 200,400,800 --out " + (dir_ / "sw").string() +
                          " --set quadrature=riemann");
    ASSERT_EQ(r.status, 0) << r.err;
    const std::string table = slurp(dir_ / "sw" / "sweep.csv");
    EXPECT_EQ(table.rfind("N,dt,events,max_abs_error,all_within_bound\n200,", 0), 0u) << table;
    EXPECT_NE(table.find("\n800,"), std::string::npos);
}

TEST_F(Cli, ConfigErrorIsOneLineAndNonzero) {
    const auto cfg = write_config("bad.json", R"({"m":0.2,"M":0.1,"alpha":1,"horizon":1,"J":10,"N":10})");
    const auto r = invoke("run --config " + cfg.string() + " --out " + (dir_ / "out").string());
    EXPECT_NE(r.status, 0);
    EXPECT_NE(r.err.find("'m'"), std::string::npos) << r.err;
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

TEST_F(Cli, MissingConfigFails) {
    const auto r = invoke("oracle --config " + (dir_ / "nope.json").string());
    EXPECT_NE(r.status, 0);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

TEST_F(Cli, UnwritableOutputFails) {
    const auto cfg = write_config("cfg.json", kTable);
    std::ofstream(dir_ / "blocker") << "x";
    const auto r = invoke("run --config " + cfg.string() + " --out " + (dir_ / "blocker" / "sub").string());
    EXPECT_NE(r.status, 0);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1) << r.err;
}

TEST_F(Cli, LogLevelFromEnvironment) {
    const auto cfg = write_config("cfg.json", kTable);
    const auto quiet = invoke("run --config " + cfg.string() + " --out " + (dir_ / "a").string(), "MASSGATE_LOG=error");
    const auto loud = invoke("run --config " + cfg.string() + " --out " + (dir_ / "b").string(), "MASSGATE_LOG=debug");
    ASSERT_EQ(quiet.status, 0);
    ASSERT_EQ(loud.status, 0);
    EXPECT_TRUE(quiet.err.empty()) << quiet.err;
    EXPECT_NE(loud.err.find("switch 1"), std::string::npos) << loud.err;
}

}  // namespace
