#include "bpdfq/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <gtest/gtest.h>

namespace bpdfq {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "bpdfq");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, SeqDefaultsToFibonacci) {
  const CliResult r = run({"seq", "--to", "6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("6\t8"), std::string::npos);
}

TEST(Cli, Presets) {
  EXPECT_EQ(preset_params("pell"), BiperiodicParams(2, 2));
  EXPECT_EQ(preset_params("k-fibonacci:3"), BiperiodicParams(3, 3));
  const CliResult r = run({"seq", "--preset", "pell", "--to", "6", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"70\""), std::string::npos);
  EXPECT_EQ(run({"seq", "--preset", "lucas"}).code, kExitUsage);
}

TEST(Cli, RationalParameters) {
  const CliResult r = run({"seq", "--a", "1/2", "--b", "2", "--kind", "dualquat", "--from", "-2", "--to", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"seq", "--a", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"seq", "--a", "1", "--b", "1", "--preset", "pell"}).code, kExitUsage);
  EXPECT_EQ(run({"seq", "--a", "0", "--b", "1"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--suite", "catalan", "--rmax", "3"}).code, kExitUsage);
}

TEST(Cli, DegenerateParametersExitTwo) {
  const CliResult r = run({"verify", "--a", "2", "--b", "-2", "--suite", "binet"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("degenerate parameters"), std::string::npos);
}

TEST(Cli, VerifySingleSuite) {
  const CliResult r = run({"verify", "--a", "2", "--b", "3", "--suite", "catalan", "--to", "10", "--format", "json"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"verdict\": \"confirmed\""), std::string::npos);
}

TEST(Cli, ExploratoryOddShifts) {
  const CliResult r = run({"verify", "--preset", "fibonacci", "--suite", "catalan", "--to", "8", "--rmax", "3",
                     "--exploratory", "--serial", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(Cli, FormatFromEnvironment) {
  ::setenv(kFormatEnv, "json", 1);
  const CliResult r = run({"seq", "--to", "2"});
  ::unsetenv(kFormatEnv);
  EXPECT_EQ(r.out.front(), '{');
}

TEST(Cli, BinaryExitCodes) {
  const std::string exe = BPDFQ_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((exe + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("seq --preset pell --to 6"), kExitOk);
  EXPECT_EQ(status("verify --suite cassini --to 10"), kExitOk);
  EXPECT_EQ(status("verify --a 1 --b -4 --suite binet"), kExitUsage);
  EXPECT_EQ(status("frobnicate"), kExitUsage);
}

}  // namespace
}  // namespace bpdfq
