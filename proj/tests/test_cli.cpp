// Copyright 2026 The paccess Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

struct Result {
    int code = -1;
    std::string out;
};

Result run(const std::string &args) {
    std::string cmd = std::string(PACCESS_CLI) + " " + args + " 2>/dev/null";
    Result r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        return r;
    }
    char buf[4096];
    for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) {
        r.out.append(buf, got);
    }
    int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("paccess_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string path(const std::string &name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

// Column `name` of a trajectory CSV.
std::vector<double> column(const std::string &csv, const std::string &name) {
    std::istringstream in(csv);
    std::string line, cell;
    std::getline(in, line);
    std::istringstream head(line);
    std::size_t idx = 0, want = std::string::npos;
    for (; std::getline(head, cell, ','); ++idx) {
        if (cell == name) want = idx;
    }
    std::vector<double> out;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        for (std::size_t i = 0; std::getline(row, cell, ','); ++i) {
            if (i == want) out.push_back(std::stod(cell));
        }
    }
    return out;
}

TEST_F(Cli, GenCaseDFiveSitesReportsFifty) {
    auto r = run("gen --chain 5 --meas 'Y1 Z2' --out " + path("set.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("|G| = 50"), std::string::npos);
    EXPECT_NE(r.out.find("k=2:2 k=3:7 k=4:15 k=5:26"), std::string::npos);
}

TEST_F(Cli, GenChainThreeFromX1ListsClosedForm) {
    auto r = run("gen --chain 3 --meas X1 --format text");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "X1\nZ1 Y2\nZ1 Z2 X3\n");
}

TEST_F(Cli, MalformedTermExitsTwo) {
    EXPECT_EQ(run("gen --chain 3 --meas X0").code, 2);
    EXPECT_EQ(run("gen --chain 3 --meas 'X1 X1'").code, 2);
    EXPECT_EQ(run("gen --chain 3").code, 2);
    EXPECT_EQ(run("gen --hamiltonian " + path("missing.json") + " --meas X1").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("verify nosuchsuite").code, 2);
}

TEST_F(Cli, ChainCommandMatchesGen) {
    auto chain = run("chain --n 4 --m 3 --format text");
    EXPECT_EQ(chain.code, 0);
    EXPECT_EQ(chain.out, "Z1 Z2 X3\nZ1 Z2 Z3 Y4\nZ1 Y2\nX1\n");
}

TEST_F(Cli, PipelineReproducesCos4t) {
    ASSERT_EQ(run("gen --chain 2 --meas Z1 --out " + path("set.json")).code, 0);
    ASSERT_EQ(run("model --chain 2 --meas Z1 --set " + path("set.json") + " --out " + path("model.json")).code, 0);
    auto sim = run("simulate --model " + path("model.json") + " --rho0 0,1 --times 0:10:0.01");
    ASSERT_EQ(sim.code, 0);
    auto t = column(sim.out, "t"), y = column(sim.out, "y_1");
    ASSERT_EQ(t.size(), 1001u);
    ASSERT_EQ(y.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        EXPECT_NEAR(y[i], std::cos(4 * t[i]), 1e-8);
    }
    auto rk = run("simulate --model " + path("model.json") + " --rho0 0,1 --times 0:10:0.01 --integrator rk4");
    auto yr = column(rk.out, "y_1");
    ASSERT_EQ(yr.size(), t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        EXPECT_NEAR(yr[i], std::cos(4 * t[i]), 1e-6);
    }
}

TEST_F(Cli, ZeroCouplingsGiveConstantTrajectories) {
    ASSERT_EQ(run("gen --chain 3 --couplings 0,0 --meas 'Y1 Z2' --out " + path("set.json")).code, 0);
    ASSERT_EQ(run("model --chain 3 --couplings 0,0 --meas 'Y1 Z2' --set " + path("set.json") + " --out " +
                  path("model.json"))
                  .code,
              0);
    auto sim = run("simulate --model " + path("model.json") + " --rho0 i+,0,1 --times 0:5:0.5");
    ASSERT_EQ(sim.code, 0);
    auto y = column(sim.out, "y_1");
    ASSERT_EQ(y.size(), 11u);
    for (double v : y) EXPECT_EQ(v, 1.0);
}

TEST_F(Cli, GraphDotAndJson) {
    ASSERT_EQ(run("gen --chain 2 --meas Z1 --out " + path("set.json")).code, 0);
    auto dot = run("graph --chain 2 --set " + path("set.json"));
    EXPECT_EQ(dot.code, 0);
    EXPECT_EQ(dot.out.rfind("graph access {", 0), 0u);
    EXPECT_NE(dot.out.find("v0 -- v2 [label=\"Y1 Y2\"]"), std::string::npos);
    auto json = run("graph --chain 2 --set " + path("set.json") + " --format json");
    EXPECT_EQ(json.code, 0);
    EXPECT_NE(json.out.find("\"edges\""), std::string::npos);
    EXPECT_EQ(run("graph --chain 3 --set " + path("set.json")).code, 2);
}

TEST_F(Cli, TamperedModelIsRejectedOnLoad) {
    ASSERT_EQ(run("gen --chain 2 --meas Z1 --out " + path("set.json")).code, 0);
    ASSERT_EQ(run("model --chain 2 --meas Z1 --set " + path("set.json") + " --out " + path("model.json")).code, 0);
    std::string text = slurp(path("model.json"));
    auto pos = text.find("-2.0");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 4, "-3.0");
    std::ofstream(path("bad.json")) << text;
    EXPECT_EQ(run("simulate --model " + path("bad.json") + " --rho0 0,1").code, 3);
}

TEST_F(Cli, SpecFileAndMeasurementsFromFile) {
    std::ofstream(path("spec.json")) << R"({"schema": "pauli-access-spec/1", "n_qubits": 2,
        "terms": [{"coeff": 1, "string": "X1 X2"}, {"coeff": 1, "string": "Y1 Y2"}],
        "measurements": ["Z1"]})";
    auto r = run("gen --hamiltonian " + path("spec.json") + " --format text");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "Z1\nZ2\nX1 Y2\nY1 X2\n");
}

TEST_F(Cli, ConfigFileSuppliesFlagsAndCommandLineWins) {
    std::ofstream(path("cfg.json")) << R"({"chain": 5, "meas": ["Y1 Z2"], "format": "text", "threads": 2})";
    auto r = run("gen --config " + path("cfg.json"));
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 50);
    auto over = run("gen --config " + path("cfg.json") + " --chain 3");
    EXPECT_EQ(over.code, 0);
    EXPECT_EQ(std::count(over.out.begin(), over.out.end(), '\n'), 9);
}

TEST_F(Cli, ThreadsDoNotChangeOutputs) {
    auto one = run("gen --chain 7 --meas 'X1 Y2 Z3'");
    auto four = run("--threads 4 gen --chain 7 --meas 'X1 Y2 Z3'");
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST_F(Cli, VerifySuitesPass) {
    for (const char *args : {"prop2 --n 2..12", "case-d-count --n 2..10", "oracle --n 2..4", "prop1", "lemmas",
                             "blocks", "trajectory --n 2..3", "appendix"}) {
        auto r = run(std::string("verify ") + args);
        EXPECT_EQ(r.code, 0) << args << "\n" << r.out;
        EXPECT_NE(r.out.find(": pass\n"), std::string::npos) << args;
    }
}

}  // namespace
