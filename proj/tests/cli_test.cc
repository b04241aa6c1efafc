#include "featureclouds/cli.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <unistd.h>

#include "featureclouds/block.h"
#include "support/oracles.h"

namespace featureclouds::cli {
namespace {

namespace fs = std::filesystem;
using testing::fixture_path;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fc_cli_test_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    unsetenv("FEATURECLOUDS_CONFIG");
  }
  void TearDown() override {
    fs::remove_all(dir_);
    unsetenv("FEATURECLOUDS_CONFIG");
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& content) const {
    std::ofstream(dir_ / name, std::ios::binary) << content;
  }

  fs::path dir_;
};

TEST_F(CliTest, NameOval) {
  const Result r = invoke({"name", fixture_path("oval.block"), "--top-k", "1"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "oval: oval\n");
}

TEST_F(CliTest, NameCorpusDirectorySorted) {
  const Result r = invoke({"name", FEATURECLOUDS_FIXTURE_DIR, "--jobs", "3"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "oval: oval\nrectangle: rectangle\n");
}

TEST_F(CliTest, NameActivityExpandsTies) {
  const Result r = invoke({"name", fixture_path("argo/activity.block")});
  EXPECT_EQ(r.out, "activity: activity diagram\n");
  const Result single =
      invoke({"name", fixture_path("argo/activity.block"), "--no-expand-ties"});
  EXPECT_EQ(single.out, "activity: activity\n");
  const Result threshold =
      invoke({"name", fixture_path("argo/activity.block"), "--threshold", "0.75"});
  EXPECT_EQ(threshold.out, "activity: activity diagram fig\n");
}

TEST_F(CliTest, TokensDump) {
  const Result r = invoke({"tokens", fixture_path("oval.block")});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "kind\tidentifier\ttoken\tstem");
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 18);
  EXPECT_NE(r.out.find("class\tOvalSettings\tsettings\tset\n"), std::string::npos);
  EXPECT_NE(r.out.find("package\tDrawing.Shapes.Oval\tdrawing\tdraw\n"), std::string::npos);
}

TEST_F(CliTest, CloudToStdoutAndFile) {
  const Result text = invoke({"cloud", fixture_path("oval.block"), "--order", "freq",
                              "--annotate-freq"});
  EXPECT_EQ(text.code, kSuccess) << text.err;
  EXPECT_EQ(text.out.rfind("oval [4] ovalx [3]", 0), 0u);

  const Result svg = invoke({"cloud", fixture_path("oval.block"), "--layout", "spiral",
                             "--out", path("x.svg"), "--canvas", "640x480"});
  EXPECT_EQ(svg.code, kSuccess) << svg.err;
  const std::string content = read_text_file(path("x.svg"));
  EXPECT_NE(content.find("width=\"640\" height=\"480\""), std::string::npos);
  EXPECT_EQ(svg.out, "");
}

TEST_F(CliTest, CloudUnwritableOutput) {
  const Result r = invoke({"cloud", fixture_path("oval.block"), "--layout", "spiral",
                           "--out", "/nonexistent/x.svg"});
  EXPECT_EQ(r.code, kDataError);
  EXPECT_NE(r.err.find("/nonexistent/x.svg"), std::string::npos);
}

TEST_F(CliTest, CloudOverflowIsPipelineError) {
  const Result r = invoke({"cloud", fixture_path("oval.block"), "--canvas", "20x20"});
  EXPECT_EQ(r.code, kPipelineError);
  EXPECT_NE(r.err.find("canvas"), std::string::npos);
}

TEST_F(CliTest, FilterRemovingEverything) {
  write("tiny.block", "MyId\n");
  const Result r = invoke({"name", path("tiny.block"), "--short-word-min", "3"});
  EXPECT_EQ(r.code, kPipelineError);
  EXPECT_NE(r.err.find("short-word-min=3"), std::string::npos);
}

TEST_F(CliTest, EvalActivityCsv) {
  const Result r = invoke({"eval", fixture_path("argo"), "--truth",
                           fixture_path("argo/truth.csv"), "--report", path("r.csv")});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  const std::string csv = read_text_file(path("r.csv"));
  EXPECT_NE(csv.find("activity,Activity,activity diagram,1.0000,0.5000,18,26,"),
            std::string::npos)
      << csv;
  EXPECT_NE(csv.find(",activity (8),diagram (8)\n"), std::string::npos);
}

TEST_F(CliTest, EvalTableToStdoutWithWarning) {
  write("truth.csv", "block_id,manual_name\noval,draw_oval\nmissing,x\n");
  const Result r = invoke({"eval", FEATURECLOUDS_FIXTURE_DIR, "--truth", path("truth.csv"),
                           "--format", "table", "--top-k", "1", "--no-expand-ties"});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_NE(r.out.find("50%"), std::string::npos) << r.out;
  EXPECT_NE(r.err.find("missing"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, kUsageError);
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--bogus"}).code, kUsageError);
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--top-k", "0"}).code, kUsageError);
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--top-k", "1", "--threshold",
                    "0.5"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--threshold", "2"}).code,
            kUsageError);
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--kind-weight", "widget=1"}).code,
            kUsageError);
  const Result r = invoke({"cloud", fixture_path("oval.block"), "--layout", "circle"});
  EXPECT_EQ(r.code, kUsageError);
  EXPECT_NE(r.err.find("--layout"), std::string::npos);
}

TEST_F(CliTest, Help) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, kSuccess);
  EXPECT_NE(r.out.find("eval"), std::string::npos);
  const Result sub = invoke({"cloud", "--help"});
  EXPECT_EQ(sub.code, kSuccess);
  EXPECT_NE(sub.out.find("--annotate-freq"), std::string::npos);
}

TEST_F(CliTest, DataErrors) {
  EXPECT_EQ(invoke({"name", "/nonexistent.block"}).code, kDataError);
  write("bad.block", "widget\tX\n");
  const Result r = invoke({"name", path("bad.block")});
  EXPECT_EQ(r.code, kDataError);
  EXPECT_NE(r.err.find("bad.block"), std::string::npos);
  EXPECT_NE(r.err.find("line 1"), std::string::npos);
  write("bad_truth.csv", "id,name\n");
  EXPECT_EQ(invoke({"eval", fixture_path("argo"), "--truth", path("bad_truth.csv")}).code,
            kDataError);
  write("ex.txt", "a b c\n");
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--exceptions", path("ex.txt")}).code,
            kDataError);
}

TEST_F(CliTest, StemmerFlags) {
  const Result nostem = invoke({"tokens", fixture_path("oval.block"), "--no-stem"});
  EXPECT_NE(nostem.out.find("\tsettings\tsettings\n"), std::string::npos);
  write("ex.txt", "settings configuration\n");
  const Result ex = invoke({"tokens", fixture_path("oval.block"), "--exceptions", path("ex.txt")});
  EXPECT_NE(ex.out.find("\tsettings\tconfiguration\n"), std::string::npos);
}

TEST_F(CliTest, ConfigFileWithFlagPrecedence) {
  write("fc.conf", "# defaults\ntop-k = 2\nexpand-ties = false\nlayout = spiral\n");
  const Result r = invoke({"name", fixture_path("oval.block"), "--config", path("fc.conf")});
  EXPECT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, "oval: oval ovalx\n");
  const Result overridden = invoke(
      {"--config=" + path("fc.conf"), "name", fixture_path("oval.block"), "--top-k", "1"});
  EXPECT_EQ(overridden.out, "oval: oval\n");

  setenv("FEATURECLOUDS_CONFIG", path("fc.conf").c_str(), 1);
  EXPECT_EQ(invoke({"name", fixture_path("oval.block")}).out, "oval: oval ovalx\n");
}

TEST_F(CliTest, ConfigFileErrors) {
  write("bad.conf", "no-such-flag = 1\n");
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--config", path("bad.conf")}).code,
            kUsageError);
  EXPECT_EQ(invoke({"name", fixture_path("oval.block"), "--config", path("none.conf")}).code,
            kDataError);
}

}  // namespace
}  // namespace featureclouds::cli
