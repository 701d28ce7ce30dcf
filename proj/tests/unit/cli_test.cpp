#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "dsbp/bench.hpp"
#include "dsbp/json_io.hpp"

namespace dsbp {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("dsbp_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  int run(const std::string& args) {
    const std::string cmd = std::string(DSBP_CLI_PATH) + " " + args + " > " + (dir_ / "stdout").string() +
                            " 2> " + (dir_ / "stderr").string();
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }

  std::string out() const {
    std::ifstream in(dir_ / "stdout");
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

TEST_F(Cli, SolveWritesAVerifiablePacking) {
  const auto inst = write("inst.json", R"({"k": 2, "bins": 2, "items": ["3", "3", "3"]})");
  const auto pack = dir_ / "pack.json";
  const auto trace = dir_ / "trace.json";
  ASSERT_EQ(run("solve --eps 3 --input " + inst.string() + " --out " + pack.string() + " --trace " + trace.string()), 0);
  EXPECT_NE(out().find("lower_bound 9/2"), std::string::npos);
  EXPECT_TRUE(fs::exists(trace));
  EXPECT_EQ(run("verify --input " + inst.string() + " --packing " + pack.string()), 0);
  EXPECT_EQ(out().substr(0, 9), "feasible\n");
}

TEST_F(Cli, SolveWithTheLpSolver) {
  const auto inst = write("inst.json", R"({"k": 2, "bins": 2, "items": ["1", "1", "1", "1"]})");
  EXPECT_EQ(run("solve --eps 2 --solver lp-bnb --input " + inst.string()), 0);
  EXPECT_EQ(run("solve --eps 2 --solver simplex --input " + inst.string()), 3);
}

TEST_F(Cli, ExactPrintsTheOptimum) {
  const auto inst = write("inst.json", R"({"k": 1, "bins": 2, "items": ["6", "2"]})");
  ASSERT_EQ(run("exact --input " + inst.string()), 0);
  EXPECT_NE(out().find("optimum 6 (6.000000)"), std::string::npos);
}

TEST_F(Cli, ExitCodes) {
  const auto infeasible = write("inf.json", R"({"k": 1, "bins": 1, "items": ["1", "1"]})");
  EXPECT_EQ(run("solve --eps 2 --input " + infeasible.string()), 1);
  EXPECT_EQ(run("exact --input " + infeasible.string()), 1);

  const auto big = write("big.json", R"({"k": 3, "bins": 3, "items": ["1", "1", "1", "1", "1", "1", "1"]})");
  EXPECT_EQ(run("exact --input " + big.string()), 2);
  EXPECT_EQ(run("exact --max-cells 21 --input " + big.string()), 0);

  const auto broken = write("broken.json", R"({"k": 1, "bins": 1, "items": [)");
  EXPECT_EQ(run("solve --eps 2 --input " + broken.string()), 3);
  EXPECT_EQ(run("solve --eps 1 --input " + infeasible.string()), 3);
  EXPECT_EQ(run("solve --input " + infeasible.string()), 3);
  EXPECT_EQ(run("verify --input " + (dir_ / "missing.json").string() + " --packing x"), 3);

  const auto inst = write("one.json", R"({"k": 1, "bins": 1, "items": ["1"]})");
  const auto half = write("half.json", R"({"bins": [[{"item": 0, "size": "1/2"}]]})");
  EXPECT_EQ(run("verify --input " + inst.string() + " --packing " + half.string()), 1);
  EXPECT_NE(out().find("item 0 underpacked"), std::string::npos);
  const auto stray = write("stray.json", R"({"bins": [[{"item": 4, "size": "1"}]]})");
  EXPECT_EQ(run("verify --input " + inst.string() + " --packing " + stray.string()), 3);
}

TEST_F(Cli, GenIsReproducibleAndLoadable) {
  const auto a = dir_ / "a.json";
  const auto b = dir_ / "b.json";
  ASSERT_EQ(run("gen --n 6 --m 3 --k 2 --dist bimodal --seed 7 --out " + a.string()), 0);
  ASSERT_EQ(run("gen --n 6 --m 3 --k 2 --dist bimodal --seed 7 --out " + b.string()), 0);
  EXPECT_EQ(read_json_file(a), read_json_file(b));
  EXPECT_EQ(load_instance(a).size(), 6U);
  EXPECT_EQ(run("gen --n 7 --m 3 --k 2"), 3);
  EXPECT_EQ(run("gen --n 2 --m 3 --k 2 --dist gauss"), 3);
}

TEST_F(Cli, BenchReportsEveryInstanceAndEps) {
  fs::create_directories(dir_ / "suite");
  write("suite/a.json", R"({"k": 2, "bins": 2, "items": ["3", "3", "3"]})");
  write("suite/b.json", R"({"k": 1, "bins": 2, "items": ["6", "2"]})");
  const auto csv = dir_ / "report.csv";
  const auto json = dir_ / "report.json";
  ASSERT_EQ(run("bench --dir " + (dir_ / "suite").string() + " --eps 2,3 --csv " + csv.string() + " --json " +
                json.string()),
            0);
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "name,n,m,k,eps,lower_bound,exact,eptas,ratio,ratio_decimal,verified,exact_seconds,eptas_seconds,error");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 4);
  EXPECT_EQ(read_json_file(json).size(), 4U);
  EXPECT_EQ(run("bench --dir " + (dir_ / "nowhere").string()), 3);
}

TEST(Bench, EmptyListGivesEmptyReport) {
  const BenchReport report = bench({});
  EXPECT_TRUE(report.rows.empty());
  std::ostringstream csv;
  report.write_csv(csv);
  const std::string text = csv.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
}

TEST(Bench, RatioIsEptasOverExact) {
  const BenchReport report = bench({{"three", Instance({3, 3, 3}, 2, 2)}});
  ASSERT_EQ(report.rows.size(), 3U);
  for (const auto& row : report.rows) {
    ASSERT_TRUE(row.exact && row.eptas && row.ratio);
    EXPECT_EQ(*row.exact, Rational(9, 2));
    EXPECT_EQ(*row.ratio, *row.eptas / *row.exact);
    EXPECT_GE(*row.ratio, 1);
    EXPECT_TRUE(row.verified);
    EXPECT_TRUE(row.error.empty());
  }
}

}  // namespace
}  // namespace dsbp
