#include "rdr/cli.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "rdr/canonical.hpp"
#include "rdr/enumerate.hpp"
#include "rdr/transforms.hpp"

namespace rdr {
namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "rdr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Result r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

// Runs the installed binary through the shell, capturing stdout and stderr.
Result run_binary(const std::string& args) {
  const std::string cmd = std::string(RDR_CLI_PATH) + " " + args + " 2>&1";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("rdr_cli_test_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

TEST(CliComputeTest, TriangleJson) {
  TempDir dir;
  const auto path = dir.write("c3.txt", "0 1\n1 2\n2 0\n");
  const auto r = run_args({"compute", "--input", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["rdr"]["value"], "18");
  EXPECT_EQ(j[0]["rdr"]["exact"], true);
}

TEST(CliComputeTest, Graph6FileToCsv) {
  TempDir dir;
  const auto path = dir.write("three.g6", "Bw\nCl\nDQo\n");
  const auto r = run_args({"compute", "--input", path, "--format", "graph6", "--emit", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  EXPECT_EQ(line, IndexReport::csv_header());
  while (std::getline(lines, line)) ++rows;
  EXPECT_EQ(rows, 3);
}

TEST(CliComputeTest, InlineAndSnpSources) {
  EXPECT_NE(run_args({"compute", "--inline", "0 1;1 2;2 3;3 0"}).out.find("\"88/3\""), std::string::npos);
  EXPECT_NE(run_args({"compute", "--n", "4", "--p", "3"}).out.find("\"143/5\""), std::string::npos);
}

TEST(CliComputeTest, DisconnectedRecordSkipped) {
  const auto r = run_args({"compute", "--inline", "0 1;2 3"});
  EXPECT_EQ(r.code, kExitBadGraph);
  EXPECT_NE(r.err.find("not connected"), std::string::npos);
  EXPECT_EQ(r.out, "[]\n");
}

TEST(CliComputeTest, ParseErrors) {
  EXPECT_EQ(run_args({"compute", "--inline", "0 x"}).code, kExitUsage);
  EXPECT_EQ(run_args({"compute", "--inline", "1 1"}).code, kExitUsage);
  EXPECT_EQ(run_args({"compute", "--input", "/nonexistent/file"}).code, kExitUsage);
  EXPECT_EQ(run_args({"compute"}).code, kExitUsage);
  EXPECT_EQ(run_args({"compute", "--inline", "0 1", "--input", "x"}).code, kExitUsage);
}

TEST(CliSweepTest, ExitCodes) {
  const auto r7 = run_args({"sweep", "--n", "7", "--emit", "csv"});
  EXPECT_EQ(r7.code, kExitOk);
  EXPECT_NE(r7.out.find("\n7,33,392/5,1,1,"), std::string::npos);
  EXPECT_EQ(run_args({"sweep", "--n", "2"}).code, kExitUsage);
  const auto big = run_args({"sweep", "--n", "10"});
  EXPECT_EQ(big.code, kExitUsage);
  EXPECT_NE(big.err.find("--allow-large-n"), std::string::npos);
  EXPECT_EQ(run_args({"sweep", "--n", "12", "--allow-large-n"}).code, kExitUsage);
  EXPECT_EQ(run_args({"sweep"}).code, kExitUsage);
  EXPECT_EQ(run_args({"sweep", "--n", "5", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(run_args({"sweep", "--n", "5", "--index", "xi"}).code, kExitUsage);
}

TEST(CliSweepTest, FourCycleCounterexampleFailsCheck) {
  const auto r = run_args({"sweep", "--n", "4"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["max_value"], "88/3");
  EXPECT_EQ(j["matches_theorem"], false);
}

TEST(CliSweepTest, OutputIndependentOfJobs) {
  const auto one = run_args({"sweep", "--n", "8", "--jobs", "1"});
  const auto three = run_args({"sweep", "--n", "8", "--jobs", "3"});
  EXPECT_EQ(one.out, three.out);
  const auto v1 = run_args({"verify", "--n", "7", "--jobs", "1", "--emit", "csv"});
  const auto v4 = run_args({"verify", "--n", "7", "--jobs", "4", "--emit", "csv"});
  EXPECT_EQ(v1.out, v4.out);
}

TEST(CliVerifyTest, SmallOrders) {
  const auto r3 = run_args({"verify", "--n", "3"});
  EXPECT_EQ(r3.code, kExitOk);
  const auto j3 = nlohmann::json::parse(r3.out);
  EXPECT_EQ(j3["total_checks"], 0);

  // Orders up to 6 include C_4, whose shrink to S_4^3 lowers RDR.
  const auto r6 = run_args({"verify", "--n", "6"});
  EXPECT_EQ(r6.code, kExitCheckFailed);
  const auto j6 = nlohmann::json::parse(r6.out);
  ASSERT_EQ(j6["counterexamples"].size(), 1u);
  EXPECT_EQ(j6["counterexamples"][0]["graph6"], "Cl");
  EXPECT_EQ(j6["counterexamples"][0]["kind"], "cycle_shrink");
  EXPECT_EQ(j6["counterexamples"][0]["rdr_before"], "88/3");
  EXPECT_EQ(j6["counterexamples"][0]["rdr_after"], "143/5");
}

TEST(CliTransformTest, Steps) {
  const auto r = run_args({"transform", "--n", "7", "--p", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j["steps"].size(), 1u);
  EXPECT_EQ(j["steps"][0]["kind"], "cycle_shrink");
  EXPECT_EQ(j["terminal_is_extremal"], true);
  EXPECT_EQ(j["terminal_code"], canonical_code(make_S(7, 3)).hex());

  const auto fixed = nlohmann::json::parse(run_args({"transform", "--n", "7", "--p", "3"}).out);
  EXPECT_TRUE(fixed["steps"].empty());
  EXPECT_EQ(run_args({"transform", "--inline", "0 1;1 2;2 3"}).code, kExitBadGraph);
}

TEST(CliTransformTest, CsvSteps) {
  const auto r = run_args({"transform", "--inline", "0 1;1 2;2 0;0 3;3 4;4 5", "--emit", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, TransformOutcome::csv_header());
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    EXPECT_EQ(line.back(), '1');
  }
  EXPECT_GE(rows, 2);
}

TEST(CliEnumerateTest, ListsClasses) {
  const auto r = run_args({"enumerate", "--n", "5", "--emit", "csv"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 6);
  const auto j = nlohmann::json::parse(run_args({"enumerate", "--n", "6"}).out);
  EXPECT_EQ(j.size(), 13u);
}

TEST(CliTest, OutFileMatchesStdout) {
  TempDir dir;
  const auto path = dir.file("out.json");
  const auto direct = run_args({"sweep", "--n", "6"});
  const auto to_file = run_args({"sweep", "--n", "6", "--out", path});
  EXPECT_EQ(to_file.code, direct.code);
  EXPECT_TRUE(to_file.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), direct.out);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run_args({}).code, kExitUsage);
  EXPECT_EQ(run_args({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_args({"compute", "--emit", "xml", "--n", "4", "--p", "3"}).code, kExitUsage);
  EXPECT_EQ(run_args({"compute", "--n", "3", "--p", "4"}).code, kExitUsage);
  EXPECT_EQ(run_args({"--help"}).code, kExitOk);
}

TEST(CliBinaryTest, ExitCodesThroughProcess) {
  EXPECT_EQ(run_binary("compute --inline '0 1;1 2;2 0'").code, 0);
  EXPECT_EQ(run_binary("sweep --n 4").code, 1);
  EXPECT_EQ(run_binary("sweep --n 2").code, 2);
  EXPECT_EQ(run_binary("compute --inline '0 1;2 3'").code, 3);
  const auto big = run_binary("sweep --n 10");
  EXPECT_EQ(big.code, 2);
  EXPECT_NE(big.out.find("--allow-large-n"), std::string::npos);
}

}  // namespace
}  // namespace rdr
