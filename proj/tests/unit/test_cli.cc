#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.h"
#include "json.hpp"

namespace fs = std::filesystem;
using homlab::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "homlab");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path &path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

class TempDir : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("homlab_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    fs::path dir_;
};

using CliFiles = TempDir;

std::vector<double> parse_csv_values(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "m_a,m_b,P");
    std::vector<double> values;
    while (std::getline(in, line)) {
        const auto last = line.rfind(',');
        values.push_back(std::strtod(line.c_str() + last + 1, nullptr));
    }
    return values;
}

}  // namespace

TEST(Cli, TwoVacuaGiveSingleEntry) {
    const auto r = invoke({"dist", "--a", "fock:0", "--b", "fock:0", "--bs", "1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["grid"], nlohmann::json::parse("[[1.0]]"));
    EXPECT_EQ(j["meta"]["bs"]["T_num"], 1);
    EXPECT_EQ(j["meta"]["bs"]["T_den"], 2);
}

TEST(Cli, SinglePhotonWithCoherentHasZeroDiagonal) {
    const auto r = invoke({"dist", "--a", "fock:1", "--b", "coherent:beta=3", "--bs", "1/2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    const int g = j["meta"]["grid_max"];
    for (int m = 0; m <= g; ++m) {
        ASSERT_LT(j["grid"][m][m].get<double>(), 1e-14);
    }
    EXPECT_TRUE(j["diagnostics"]["cnl_verdict"].get<bool>());
}

TEST(Cli, GridMaxShapesOutput) {
    const auto r = invoke({"dist", "--a", "fock:1", "--b", "coherent:beta=1", "--bs", "1/2", "--grid-max", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j["grid"].size(), 6u);
    for (const auto &row : j["grid"]) {
        ASSERT_EQ(row.size(), 6u);
    }
    EXPECT_FALSE(j["diagnostics"]["warnings"].empty());
}

TEST_F(CliFiles, JsonRoundTripIsBitExact) {
    const auto path = dir_ / "d.json";
    const auto r = invoke({"dist", "--a", "oddcat:alpha=2", "--b", "thermal:nbar=3", "--bs", "theta=1.1", "-o",
                           path.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    const auto back = homlab::cli::read_distribution_json(slurp(path));
    const auto direct = homlab::joint_distribution(homlab::odd_cat(2.0), homlab::thermal(3.0),
                                                   homlab::BeamSplitterSetting::angle(1.1));
    ASSERT_EQ(back.grid.size(), direct.grid.size());
    EXPECT_EQ(std::memcmp(back.grid.data(), direct.grid.data(), direct.grid.size() * sizeof(double)), 0);
    EXPECT_EQ(back.total_mass, direct.total_mass);
    EXPECT_EQ(back.bs.theta(), 1.1);
    for (const auto &entry : fs::directory_iterator(dir_)) {
        EXPECT_EQ(entry.path().filename(), "d.json");
    }
}

TEST(Cli, CsvMatchesJson) {
    const std::vector<std::string> base{"dist", "--a", "pasmss:r=0.5", "--b", "coherent:beta=1.5", "--bs", "3/4"};
    auto json_args = base;
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    const auto j = invoke(json_args);
    const auto c = invoke(csv_args);
    ASSERT_EQ(j.code, 0);
    ASSERT_EQ(c.code, 0);
    const auto doc = nlohmann::json::parse(j.out);
    const auto values = parse_csv_values(c.out);
    const int g = doc["meta"]["grid_max"];
    ASSERT_EQ(values.size(), static_cast<std::size_t>((g + 1) * (g + 1)));
    for (int a = 0; a <= g; ++a) {
        for (int b = 0; b <= g; ++b) {
            ASSERT_EQ(values[static_cast<std::size_t>(a * (g + 1) + b)], doc["grid"][a][b].get<double>());
        }
    }
}

TEST(Cli, IdenticalRunsAreByteIdentical) {
    const std::vector<std::string> args{"lossy", "--a", "fock:1", "--b", "coherent:beta=1", "--eta", "0.95"};
    const auto first = invoke(args);
    const auto second = invoke(args);
    ASSERT_EQ(first.code, 0) << first.err;
    EXPECT_EQ(first.out, second.out);
    const auto j = nlohmann::json::parse(first.out);
    EXPECT_EQ(j["meta"]["eta_a"], 0.95);
    EXPECT_GT(j["grid"][1][1].get<double>(), 0.0);
}

TEST_F(CliFiles, ConfigFileAndFlagOverride) {
    const auto config = dir_ / "run.json";
    std::ofstream(config) << R"({"command": "dist", "state_a": "fock:1", "state_b": "fock:1", "bs": "1/2", "format": "csv"})";
    const auto from_file = invoke({"--config", config.string()});
    ASSERT_EQ(from_file.code, 0) << from_file.err;
    EXPECT_EQ(from_file.out.substr(0, 10), "m_a,m_b,P\n");
    const auto overridden = invoke({"--config", config.string(), "--format", "json", "dist", "--b", "fock:2"});
    ASSERT_EQ(overridden.code, 0) << overridden.err;
    const auto j = nlohmann::json::parse(overridden.out);
    EXPECT_EQ(j["meta"]["state_a"], "fock:1");
    EXPECT_EQ(j["meta"]["state_b"], "fock:2");
    EXPECT_EQ(j["meta"]["grid_max"], 3);
}

TEST_F(CliFiles, BadConfigKeysAreUsageErrors) {
    const auto config = dir_ / "bad.json";
    std::ofstream(config) << R"({"command": "dist", "colour": "blue"})";
    const auto r = invoke({"--config", config.string()});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("colour"), std::string::npos);
    EXPECT_EQ(invoke({"--config", (dir_ / "missing.json").string()}).code, 4);
}

TEST(Cli, ExitCodesNameTheFlag) {
    auto r = invoke({"dist", "--a", "bogus:1", "--b", "fock:1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--a"), std::string::npos);
    r = invoke({"dist", "--a", "fock:1", "--b", "fock:1", "--bs", "3/2"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--bs"), std::string::npos);
    r = invoke({"dist", "--a", "fock:1", "--b", "coherent:beta=3,cutoff=4"});
    EXPECT_EQ(r.code, 3);
    EXPECT_NE(r.err.find("--b"), std::string::npos);
    r = invoke({"dist", "--a", "fock:1"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--b"), std::string::npos);
    r = invoke({"zeros", "--n", "2", "--T", "theta=1", "--max", "4"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--T"), std::string::npos);
    r = invoke({"dist", "--grid-max", "abc"});
    EXPECT_EQ(r.code, 2);
    r = invoke({"dist", "--a", "fock:1", "--b", "fock:1", "--format", "xml"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("--format"), std::string::npos);
    r = invoke({"dist", "--a", "fock:1", "--b", "fock:1", "-o", "/nonexistent/dir/out.json"});
    EXPECT_EQ(r.code, 4);
    r = invoke({"herald", "--t", "1", "--eta", "0", "--r", "0.5"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(invoke({}).code, 2);
}

TEST(Cli, HeraldReportsPosterior) {
    const auto r = invoke({"herald", "--t", "2", "--eta", "0.87", "--r", "1.5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_NEAR(j["posterior"].get<double>(), 0.71, 0.01);
    EXPECT_NEAR(j["squeezing_db"].get<double>(), -13.03, 0.01);
    double total = 0.0;
    for (const auto &e : j["distribution"]) {
        total += e["posterior"].get<double>();
    }
    EXPECT_NEAR(total, 1.0, 1e-9);
}

TEST(Cli, ZerosCommand) {
    const auto r = invoke({"zeros", "--n", "3", "--T", "3/4", "--max", "200", "--min-a", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["count"], 7);
    EXPECT_EQ(j["zeros"][6]["m_a"], 70);
    EXPECT_EQ(j["zeros"][6]["m_b"], 162);
    EXPECT_EQ(j["zeros"][0]["physical"], false);
}

TEST(Cli, ParametricCommand) {
    const auto r = invoke({"parametric", "--n", "2", "--T", "1/2", "--degree", "2", "--lo", "-5", "--hi", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    bool table_row = false;
    for (const auto &s : j["solutions"]) {
        table_row = table_row || s["family"] == "(2k^2-k, 2k^2-3k+1)";
    }
    EXPECT_TRUE(table_row);
    const auto empty = invoke({"parametric", "--n", "3", "--T", "3/4", "--lo", "-3", "--hi", "3"});
    EXPECT_EQ(nlohmann::json::parse(empty.out)["count"], 0);
}

TEST(Cli, DickeCommand) {
    const auto r = invoke({"dicke", "--j-min", "1", "--j-max", "3", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "J,M,n,m,P_center");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
    }
    EXPECT_EQ(rows, 3 + 5 + 7);
}

TEST(Cli, VerifyFlagsTheMisprintedRow) {
    const auto r = invoke({"verify", "--tables", "appendix-c"});
    EXPECT_EQ(r.code, 1);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["total"], 17);
    EXPECT_EQ(j["valid_count"], 16);
    for (const auto &row : j["rows"]) {
        EXPECT_EQ(row["valid"], !(row["table"] == "I" && row["row"] == 3));
        EXPECT_TRUE(row["certificates_agree"].get<bool>());
    }
    EXPECT_EQ(invoke({"verify", "--tables", "other"}).code, 2);
}

TEST(Cli, ParseBs) {
    EXPECT_EQ(homlab::cli::parse_bs("3/4").exact_transmittance(), homlab::BigRational(3, 4));
    EXPECT_EQ(homlab::cli::parse_bs("0.75").exact_transmittance(), homlab::BigRational(3, 4));
    EXPECT_EQ(homlab::cli::parse_bs("T=1/3").exact_transmittance(), homlab::BigRational(1, 3));
    EXPECT_DOUBLE_EQ(homlab::cli::parse_bs("theta=1.0472").theta(), 1.0472);
    EXPECT_THROW(homlab::cli::parse_bs("theta=x"), std::invalid_argument);
    EXPECT_THROW(homlab::cli::parse_bs("half"), std::invalid_argument);
}

TEST(Cli, BinaryExitStatus) {
    const std::string bin = HOMLAB_CLI_PATH;
    int status = std::system((bin + " verify > /dev/null").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 1);
    status = std::system((bin + " dist --a fock:1 --b fock:1 > /dev/null").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 0);
    status = std::system((bin + " dist --a nope:1 --b fock:1 2> /dev/null").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 2);
    status = std::system((bin + " --version > /dev/null").c_str());
    EXPECT_EQ(WEXITSTATUS(status), 0);
}
