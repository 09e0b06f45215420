#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bfb/io.hpp"
#include "bfb/sketch.hpp"
#include "cli.hpp"

namespace bfb {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("bfb_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "bfb");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  static std::size_t lines(const std::string& text) {
    return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, CorrExperimentIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"corr-exp", "--seed", "7", "--reps", "10", "--n", "200", "--d", "8", "--m", "30", "--quiet"};
  auto first = args;
  first.insert(first.end(), {"--out", path("t1.csv")});
  ASSERT_EQ(run(first), cli::kExitOk) << err_.str();
  const std::string a = slurp(path("t1.csv"));
  const std::string pa = slurp(path("t1_points.csv"));
  ASSERT_EQ(run(first), cli::kExitOk);
  EXPECT_EQ(slurp(path("t1.csv")), a);
  EXPECT_EQ(slurp(path("t1_points.csv")), pa);
  EXPECT_EQ(lines(a), 9u);
  const auto prov = nlohmann::json::parse(slurp(path("t1.csv.json")));
  EXPECT_EQ(prov.at("seed"), 7);
  EXPECT_EQ(prov.at("config").at("reps"), 10);
}

TEST_F(CliTest, DifferentSeedsDiffer) {
  ASSERT_EQ(run({"corr-exp", "--seed", "1", "--reps", "10", "--n", "200", "--d", "8", "--m", "30", "--quiet", "--out", path("a.csv")}), 0);
  ASSERT_EQ(run({"corr-exp", "--seed", "2", "--reps", "10", "--n", "200", "--d", "8", "--m", "30", "--quiet", "--out", path("b.csv")}), 0);
  EXPECT_NE(slurp(path("a.csv")), slurp(path("b.csv")));
}

TEST_F(CliTest, BoundExperimentDefaultGridRowCount) {
  ASSERT_EQ(run({"bound-exp", "--n", "200", "--d", "8", "--m", "30", "--out", path("bound.csv")}), cli::kExitOk) << err_.str();
  EXPECT_EQ(lines(slurp(path("bound.csv"))), 81u * 2u + 1u);
  EXPECT_NE(out_.str().find("violations"), std::string::npos);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  std::ofstream(path("cfg.json")) << R"({"reps": 4, "n": 150, "d": 6, "m": [20], "seed": 3})";
  ASSERT_EQ(run({"corr-exp", "--config", path("cfg.json"), "--seed", "9", "--quiet", "--out", path("c.csv")}), 0) << err_.str();
  const auto prov = nlohmann::json::parse(slurp(path("c.csv.json")));
  EXPECT_EQ(prov.at("seed"), 9);
  EXPECT_EQ(prov.at("config").at("reps"), 4);
  EXPECT_EQ(prov.at("config").at("n"), 150);
}

TEST_F(CliTest, BoostExperimentWritesTrialsAndSummary) {
  ASSERT_EQ(run({"boost-exp", "--reps", "3", "--n", "200", "--d", "8", "--quiet", "--out", path("boost.csv")}), 0) << err_.str();
  EXPECT_EQ(lines(slurp(path("boost.csv"))), 1u + 3u * 3u * 2u);
  EXPECT_TRUE(fs::exists(path("boost_summary.csv")));
  EXPECT_TRUE(fs::exists(path("boost.csv.json")));
}

TEST_F(CliTest, BoostExperimentFromFiles) {
  const Matrix a = Matrix::Random(120, 5);
  const Vector b = Vector::Random(120), bt = Vector::Random(120);
  io::write_bfb1(path("a.bfb1"), a);
  io::write_bfb1(path("b.bfb1"), b);
  io::write_bfb1(path("bt.bfb1"), bt);
  ASSERT_EQ(run({"boost-exp", "--a", path("a.bfb1"), "--b", path("b.bfb1"), "--bt", path("bt.bfb1"), "--reps", "2",
                 "--sketch", "uniform", "--quiet", "--out", path("f.csv")}),
            0)
      << err_.str();
  EXPECT_EQ(lines(slurp(path("f.csv"))), 1u + 2u * 2u);
}

TEST_F(CliTest, UnknownFlagIsUsageError) {
  EXPECT_EQ(run({"corr-exp", "--bogus"}), cli::kExitUsage);
  EXPECT_FALSE(err_.str().empty());
  EXPECT_EQ(run({"frobnicate"}), cli::kExitUsage);
  EXPECT_EQ(run({}), cli::kExitUsage);
}

TEST_F(CliTest, HelpExitsCleanly) {
  EXPECT_EQ(run({"--help"}), cli::kExitOk);
  EXPECT_NE(out_.str().find("corr-exp"), std::string::npos);
}

TEST_F(CliTest, InvalidValueIsUsageError) {
  EXPECT_EQ(run({"corr-exp", "--kappa", "1.5", "--out", path("x.csv")}), cli::kExitUsage);
  EXPECT_EQ(run({"corr-exp", "--sketch", "hadamard", "--out", path("x.csv")}), cli::kExitUsage);
}

TEST_F(CliTest, NumericalFailureExitsTwo) {
  // Three nodes cannot resolve degree four, so the factor bases lose rank.
  EXPECT_EQ(run({"sample", "--q", "2", "--zeta", "4", "--nodes", "3", "--m", "10", "--out", path("s.json")}),
            cli::kExitNumerical);
}

TEST_F(CliTest, DesignBuildWritesOrthonormalMatrix) {
  ASSERT_EQ(run({"design-build", "--q", "2", "--zeta", "4", "--space", "td", "--nodes", "10", "--out", path("d.bfb1")}), 0)
      << err_.str();
  const Matrix a = io::read_bfb1(path("d.bfb1"));
  EXPECT_EQ(a.rows(), 100);
  EXPECT_EQ(a.cols(), 15);
  EXPECT_LE((a.transpose() * a - Matrix::Identity(15, 15)).cwiseAbs().maxCoeff(), 1e-10);
  const auto meta = nlohmann::json::parse(slurp(path("d.bfb1.json")));
  EXPECT_EQ(meta.at("cols"), 15);
}

TEST_F(CliTest, DesignBuildHonorsMemoryCap) {
  EXPECT_EQ(run({"design-build", "--q", "2", "--zeta", "2", "--nodes", "10", "--memory-cap", "10", "--out", path("d.bfb1")}),
            cli::kExitUsage);
}

TEST_F(CliTest, SampleFromDesignAndFromMatrix) {
  ASSERT_EQ(run({"sample", "--q", "3", "--zeta", "3", "--nodes", "50", "--m", "40", "--seed", "5", "--out", path("s.json")}), 0)
      << err_.str();
  const SketchOperator s = sketch_from_json(slurp(path("s.json")));
  EXPECT_EQ(s.n(), 125000);
  EXPECT_EQ(s.m(), 40);
  EXPECT_EQ(s.spec().kind, SketchKind::leverage);

  io::write_bfb1(path("a.bfb1"), Matrix(Matrix::Random(80, 4)));
  ASSERT_EQ(run({"sample", "--a", path("a.bfb1"), "--sketch", "leveraged_volume", "--m", "8", "--out", path("v.json")}), 0)
      << err_.str();
  EXPECT_EQ(sketch_from_json(slurp(path("v.json"))).m(), 8);
  EXPECT_EQ(run({"sample", "--m", "8", "--out", path("w.json")}), cli::kExitUsage);
}

TEST_F(CliTest, WickCheckWritesThreeCases) {
  ASSERT_EQ(run({"wick-check", "--samples", "200000", "--out", path("wick.csv")}), 0) << err_.str();
  const std::string csv = slurp(path("wick.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "case,mc_estimate,exact,rel_err");
  EXPECT_EQ(lines(csv), 4u);
}

}  // namespace
}  // namespace bfb
