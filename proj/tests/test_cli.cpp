#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "runfall/cli/app.hpp"
#include "runfall/cli/curve_csv.hpp"
#include "runfall/ingest.hpp"
#include "scratch_dir.hpp"
#include "svg_inspect.hpp"

using namespace runfall;
using namespace runfall::cli;
using testing_support::ScratchDir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("RUNFALL_SEED");
    logs_ = dir_ / "logs";
    for (const char* label : {"alpha", "beta"}) {
      const auto r = invoke({"run", "--functions", "sphere,rastrigin", "--dim", "2", "--dim", "3", "--instances", "4",
                          "--budget", "2e3", "--seed", label[0] == 'a' ? "1" : "2", "--label", label, "--out",
                          logs_.string()});
      ASSERT_EQ(r.code, 0) << r.err;
    }
  }

  ScratchDir dir_{"cli"};
  std::filesystem::path logs_;
};

}  // namespace

TEST(Cli, HelpAndUsageErrors) {
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
  const auto none = invoke({});
  EXPECT_EQ(none.code, kExitUsage);
  const auto unknown = invoke({"frobnicate"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(invoke({"art", "--targets"}).code, kExitUsage);
}

TEST_F(CliTest, RunWritesOneLogPerTrialWithSeedComment) {
  std::size_t files = 0;
  for (const auto& e : std::filesystem::directory_iterator(logs_)) {
    ++files;
    EXPECT_EQ(e.path().extension(), ".rlog");
  }
  EXPECT_EQ(files, 2u * 2 * 2 * 4);
  const std::string text = read_text_file(logs_ / "alpha_sphere_d2_i001.rlog");
  EXPECT_NE(text.find("# seed=1\n"), std::string::npos);
  EXPECT_NE(text.find("# prng=mt19937_64"), std::string::npos);
}

TEST_F(CliTest, RunRequiresSeed) {
  const auto r = invoke({"run", "--dim", "2", "--out", (dir_ / "x").string()});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("--seed"), std::string::npos);
  setenv("RUNFALL_SEED", "5", 1);
  const auto ok = invoke({"run", "--functions", "sphere", "--dim", "2", "--instances", "1", "--budget", "10", "--out",
                       (dir_ / "x").string()});
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_NE(ok.out.find("seed=5"), std::string::npos);
  unsetenv("RUNFALL_SEED");
}

TEST_F(CliTest, RunRejectsBadBudgetAndFunction) {
  const std::string out = (dir_ / "y").string();
  EXPECT_EQ(invoke({"run", "--dim", "2", "--seed", "1", "--budget", "1.5", "--out", out}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--dim", "2", "--seed", "1", "--functions", "f9", "--out", out}).code, kExitUsage);
  EXPECT_EQ(invoke({"run", "--dim", "2", "--seed", "1", "--suite", "bbob", "--out", out}).code, kExitUsage);
}

TEST_F(CliTest, ArtCsvOnStdout) {
  const auto r = invoke({"art", "--in", logs_.string(), "--targets", "1e2:1e-8:51"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("algorithm,function,dimension,precision,n_success,K,art\n"), std::string::npos);
  EXPECT_NE(r.out.find("\nalpha,rastrigin,2,100,4,4,"), std::string::npos);
  std::size_t rows = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) rows += (!line.empty() && line[0] != '#');
  EXPECT_EQ(rows, 1u + 2 * 2 * 2 * 51);
}

TEST_F(CliTest, ArtStableUnderInputOrder) {
  std::vector<std::string> a = {"art"}, b = {"art"};
  std::vector<std::string> files;
  for (const auto& e : std::filesystem::directory_iterator(logs_)) files.push_back(e.path().string());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) a.insert(a.end(), {"--in", f});
  for (auto it = files.rbegin(); it != files.rend(); ++it) b.insert(b.end(), {"--in", *it});
  EXPECT_EQ(invoke(a).out, invoke(b).out);
}

TEST_F(CliTest, MissingInputIsDataError) {
  EXPECT_EQ(invoke({"art", "--in", (dir_ / "nothing").string()}).code, kExitData);
  write_text_file(dir_ / "bad/x.rlog", "garbage");
  const auto r = invoke({"art", "--in", (dir_ / "bad").string()});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_NE(r.err.find("x.rlog"), std::string::npos);
}

TEST_F(CliTest, EcdfRefusesSeveralDimensions) {
  const auto r = invoke({"ecdf", "--in", logs_.string(), "--algorithm", "alpha", "--dim", "2", "--dim", "3", "--seed", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("dimensions"), std::string::npos);
}

TEST_F(CliTest, EcdfNeedsAlgorithmWhenAmbiguous) {
  EXPECT_EQ(invoke({"ecdf", "--in", logs_.string(), "--dim", "2", "--seed", "1"}).code, kExitUsage);
}

TEST_F(CliTest, EcdfEmbedsReproducibilityMetadata) {
  const auto r = invoke({"ecdf", "--in", logs_.string(), "--algorithm", "beta", "--dim", "3", "--seed", "42", "-N", "30"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const EcdfCsv csv = read_ecdf_csv(r.out);
  EXPECT_EQ(csv.get("seed"), "42");
  EXPECT_EQ(csv.get("N"), "30");
  EXPECT_EQ(csv.get("prng"), "mt19937_64/lemire-bounded/53bit-unit");
  EXPECT_EQ(csv.curve.total_count(), 2u * 51 * 30);
  EXPECT_EQ(csv.curve.cross_x(), 2000.0);
}

TEST_F(CliTest, EcdfThreadCountDoesNotMatter) {
  const std::vector<std::string> base = {"ecdf", "--in", logs_.string(), "--algorithm", "alpha", "--dim", "2",
                                         "--seed", "9", "-N", "50"};
  auto one = base, many = base;
  one.insert(one.end(), {"--threads", "1"});
  many.insert(many.end(), {"--threads", "7"});
  EXPECT_EQ(invoke(one).out, invoke(many).out);
}

TEST_F(CliTest, PlotEcdfWritesSvg) {
  const auto csv = dir_ / "curves.csv";
  ASSERT_EQ(invoke({"ecdf", "--in", logs_.string(), "--algorithm", "alpha", "--dim", "2", "--seed", "1", "-N", "20",
                 "--out", csv.string()})
                .code,
            kExitOk);
  const auto svg = dir_ / "fig.svg";
  const auto r = invoke({"plot", "--kind", "ecdf", "--in", csv.string(), "--out", svg.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto tree = testing_support::parse_svg(read_text_file(svg));
  EXPECT_EQ(testing_support::count_elements(tree, "polyline", "ecdf"), 1);
  EXPECT_NE(tree.get<std::string>("svg.metadata").find("curve0.seed=1"), std::string::npos);
}

TEST_F(CliTest, PlotScalingWritesSvg) {
  const auto svg = dir_ / "scaling.svg";
  const auto r = invoke({"plot", "--kind", "scaling", "--in", logs_.string(), "--function", "sphere", "--precision", "1e-8",
                      "--out", svg.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto tree = testing_support::parse_svg(read_text_file(svg));
  EXPECT_EQ(testing_support::count_elements(tree, "path", "missing-arrow"), 4);
  EXPECT_EQ(invoke({"plot", "--kind", "pie", "--in", "x", "--out", svg.string()}).code, kExitUsage);
}

TEST_F(CliTest, BestThenTargetsFromComposedTable) {
  const auto table = dir_ / "best.tbl";
  const auto best = invoke({"best", "--in", logs_.string(), "--dim", "2", "--table-out", table.string()});
  ASSERT_EQ(best.code, kExitOk) << best.err;
  EXPECT_NE(best.out.find("function,dimension,precision,algorithm,art,n_success,K\n"), std::string::npos);
  const auto t = invoke({"targets", "--table", table.string(), "--function", "sphere", "--dim", "2"});
  ASSERT_EQ(t.code, kExitOk) << t.err;
  EXPECT_NE(t.out.find("budget,precision\n1,"), std::string::npos);
  EXPECT_EQ(invoke({"targets", "--table", table.string(), "--function", "sphere", "--dim", "3"}).code, kExitData);
}

TEST_F(CliTest, TargetsFromRunLogs) {
  const auto r = invoke({"targets", "--in", logs_.string(), "--algorithm", "alpha", "--function", "rastrigin", "--dim",
                      "3", "--budgets", "thirtyone", "--no-unique"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::size_t rows = 0;
  std::istringstream in(r.out);
  for (std::string line; std::getline(in, line);) rows += (!line.empty() && line[0] != '#');
  EXPECT_EQ(rows, 32u);
  EXPECT_NE(r.out.find("# unique=off"), std::string::npos);
}
