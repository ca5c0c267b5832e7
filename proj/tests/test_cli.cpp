#include "klsig/cli.hpp"

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace klsig;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
  auto d = fs::temp_directory_path() / ("klsig_cli_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

JobConfig job(const std::string& type, std::vector<long> painting, std::vector<std::string> suites = {}) {
  JobConfig c;
  c.type = type;
  c.painting = std::move(painting);
  c.suites = std::move(suites);
  return c;
}

int run_quiet(const JobConfig& c) {
  std::ostringstream log;
  return run(c, log);
}

int shell(const std::string& args) {
  const std::string cmd = std::string(KLSIG_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(Cli, A1AllSuitesPass) {
  auto c = job("A1", {});
  c.out = (temp_dir() / "a1.json").string();
  EXPECT_EQ(run_quiet(c), kExitOk);
  auto rep = Json::parse(slurp(c.out));
  EXPECT_EQ(rep["schema_version"], "1");
  EXPECT_TRUE(rep["pass"].get<bool>());
  ASSERT_EQ(rep["suites"].size(), all_suites().size());
  for (const auto& s : rep["suites"]) {
    EXPECT_TRUE(s["pass"].get<bool>()) << s["name"];
    EXPECT_TRUE(s.contains("seconds"));
  }
  c.painting = {1};
  EXPECT_EQ(run_quiet(c), kExitOk);
}

TEST(Cli, SignedInversionOnA2) {
  auto dir = temp_dir();
  auto c = job("A2", {}, {"signed-inversion"});
  c.out = (dir / "a2.json").string();
  EXPECT_EQ(run_quiet(c), kExitOk);
  // painting {1}: epsilon is not w0-invariant and the twist table gives S T != I
  c.painting = {1};
  EXPECT_EQ(run_quiet(c), kExitFailed);
  auto rep = Json::parse(slurp(c.out));
  EXPECT_FALSE(rep["pass"].get<bool>());
  EXPECT_FALSE(rep["suites"][0]["counterexamples"].empty());
  EXPECT_EQ(rep["suites"][0]["details"]["w0_parity_mismatches"], 8);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_quiet(job("A2", {3})), kExitUsage);
  EXPECT_EQ(run_quiet(job("E8", {})), kExitUsage);
  EXPECT_EQ(run_quiet(job("", {})), kExitUsage);
  EXPECT_EQ(run_quiet(job("A2", {}, {"bogus"})), kExitUsage);
  EXPECT_EQ(run_quiet(job("A3", {}, {"jantzen-oracle"})), kExitUsage);
  auto c = job("A2", {});
  c.depth = 9;
  EXPECT_EQ(run_quiet(c), kExitUsage);
  c = job("A2", {}, {"signed-inversion"});
  c.lambda = "-1/2,-1";
  EXPECT_EQ(run_quiet(c), kExitUsage);
  c.lambda = "rho";
  EXPECT_EQ(run_quiet(c), kExitUsage);
  c = job("A2", {}, {"jantzen-oracle"});
  c.depth = 7;
  EXPECT_EQ(run_quiet(c), kExitUsage);
  c = job("A2", {});
  c.format = "xml";
  EXPECT_EQ(run_quiet(c), kExitUsage);
}

TEST(Cli, NonIntegralLambdaUsesIntegralSubgroup) {
  auto c = job("B2", {}, {"classical-inversion", "coherent-step", "characters"});
  c.lambda = "-1/2,-1";
  c.out = (temp_dir() / "b2.json").string();
  EXPECT_EQ(run_quiet(c), kExitOk);
  auto rep = Json::parse(slurp(c.out));
  EXPECT_EQ(rep["header"]["elements"].size(), 4u);
}

TEST(Cli, DumpContents) {
  auto dir = temp_dir();
  auto c = job("A1", {1});
  c.out = (dir / "a1_dump.json").string();
  std::ostringstream log;
  ASSERT_EQ(dump(c, log), kExitOk);
  auto d = Json::parse(slurp(c.out));
  EXPECT_EQ(d["kl_table"].size(), 4u);
  EXPECT_EQ(d["S"]["s1"]["e"], -1);
  EXPECT_EQ(d["T"]["s1"]["e"], 1);
  EXPECT_EQ(d["D"]["s1"], -1);

  c = job("A2", {});
  c.out = (dir / "a2_dump.json").string();
  ASSERT_EQ(dump(c, log), kExitOk);
  d = Json::parse(slurp(c.out));
  EXPECT_EQ(d["header"]["elements"], Json({"e", "s1", "s2", "s1s2", "s2s1", "s1s2s1"}));
  EXPECT_EQ(d["A"].size(), 6u);
  EXPECT_EQ(d["kl_table"].size(), 36u);
  const std::string first = slurp(c.out);
  ASSERT_EQ(dump(c, log), kExitOk);
  EXPECT_EQ(first, slurp(c.out));

  c.format = "csv";
  c.out = (dir / "a2_csv").string();
  ASSERT_EQ(dump(c, log), kExitOk);
  for (const char* f : {"kl.csv", "A.csv", "B.csv", "signed.csv", "S.csv", "T.csv", "D.csv"})
    EXPECT_TRUE(fs::exists(dir / "a2_csv" / f)) << f;
  auto csv = slurp(dir / "a2_csv" / "B.csv");
  EXPECT_NE(csv.find("x\\y,e,s1,s2,s1s2,s2s1,s1s2s1\n"), std::string::npos);
  EXPECT_NE(csv.find("s1s2s1,-1,1,1,-1,-1,1\n"), std::string::npos);
  c.out.clear();
  EXPECT_EQ(dump(c, log), kExitUsage);
}

TEST(Cli, ReportsDeterministicApartFromTimings) {
  auto dir = temp_dir();
  auto c = job("A2", {1}, {"classical-inversion", "conjugation", "characters"});
  c.out = (dir / "det.json").string();
  run_quiet(c);
  auto a = Json::parse(slurp(c.out));
  run_quiet(c);
  auto b = Json::parse(slurp(c.out));
  for (auto* r : {&a, &b})
    for (auto& s : (*r)["suites"]) s.erase("seconds");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(CliBinary, ExitCodesAndConfigPrecedence) {
  auto dir = temp_dir();
  EXPECT_EQ(shell("verify --type A1"), 0);
  EXPECT_EQ(shell("verify --type A2 --painting 3"), 2);
  EXPECT_EQ(shell("verify --type A2 --painting 1 --suite signed-inversion"), 1);
  EXPECT_EQ(shell("verify --type A2 --suite nope"), 2);
  EXPECT_EQ(shell("frobnicate"), 2);
  EXPECT_EQ(shell("verify --type A2 --painting 1,x"), 2);

  const auto cfg = dir / "job.cfg";
  std::ofstream(cfg) << "type=A2\npainting=1,2\nlambda=-2rho\nsuite=conjugation\n";
  const auto out = dir / "cfg.json";
  ASSERT_EQ(shell("verify --config " + cfg.string() + " --lambda -rho --out " + out.string()), 0);
  auto rep = Json::parse(slurp(out));
  EXPECT_EQ(rep["header"]["painting"], Json({1, 2}));
  EXPECT_EQ(rep["header"]["lambda"], Json({-1, -1}));
  ASSERT_EQ(rep["suites"].size(), 1u);
  EXPECT_EQ(rep["suites"][0]["name"], "conjugation");
}
