#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"
#include "thetadim/cli.hpp"
#include "thetadim/network.hpp"

using namespace thetadim;
using namespace thetadim::testing;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, DimCounterexample) {
  const CliRun r = run({"dim", "3", "7", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "dimension 3\ncase T4-P1\nswapped false\n");
}

TEST(Cli, DimWithOracle) {
  const CliRun r = run({"dim", "3", "7", "3", "--oracle"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "dimension 3\ncase T4-P1\nswapped false\noracle 3\nwitness 1,2,6\nagrees true\n");
}

TEST(Cli, Basis) {
  const CliRun r = run({"basis", "4", "3", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "case T3-P1\nswapped true\nlandmarks 8,11\nbasis 8,11\ndimension 2\nresolving true\n");
}

TEST(Cli, CheckUnresolved) {
  const CliRun r = run({"check", "3", "7", "3", "--set", "2,6"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_EQ(r.out, "resolving false\nunresolved 9 11\n");
}

TEST(Cli, CheckResolving) {
  const CliRun r = run({"check", "3", "7", "3", "--set", "1,2,6"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "resolving true\nminimal true\n");
}

TEST(Cli, CheckVertexOutOfRange) {
  const CliRun r = run({"check", "3", "7", "3", "--set", "1,14"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, Build) {
  const CliRun r = run({"build", "1", "2", "1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "# C(1,2,1) theta 2,1,2\n4 5\n1 2\n1 3\n2 3\n2 4\n3 4\n");
}

TEST(Cli, BuildNetworkFeedsLandmarks) {
  const CliRun built = run({"build", "5", "3", "4", "--network"});
  ASSERT_EQ(built.code, kExitOk);
  const NetworkSpec spec = parse_network(built.out);
  EXPECT_EQ(spec.nodes.size(), 12u);
  EXPECT_EQ(assign_landmarks(spec).landmarks, (std::vector<std::string>{"v1", "v4"}));
}

TEST(Cli, InvalidParamsAreDomainErrors) {
  const CliRun r = run({"dim", "0", "2", "2"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("invalid parameters (0,2,2)"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"dim", "3", "7"}).code, kExitUsage);
  EXPECT_EQ(run({"dim", "x", "7", "3"}).code, kExitUsage);
  EXPECT_EQ(run({"check", "3", "7", "3", "--set", "2,x"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--max-n", "5", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run({"sweep", "--max-n", "5", "--case", "T9"}).code, kExitUsage);
  EXPECT_EQ(run({"landmarks", "/nonexistent/file.net"}).code, kExitUsage);
}

TEST(Cli, HelpExitsCleanly) {
  const CliRun r = run({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("landmarks"), std::string::npos);
}

TEST(Cli, SweepEmpty) {
  const CliRun r = run({"sweep", "--max-n", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("\"records\": []"), std::string::npos);
}

TEST(Cli, SweepCsvHasOneHeader) {
  const CliRun r = run({"sweep", "--max-n", "6", "--format", "csv"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.rfind("n,p,q,r,", 0), 0u);
  EXPECT_EQ(r.out.find("n,p,q,r,", 1), std::string::npos);
}

TEST(Cli, SweepOverCap) { EXPECT_EQ(run({"sweep", "--max-n", "30"}).code, kExitDomain); }

TEST(Cli, LandmarksGolden) {
  const CliRun r = run({"landmarks", data_path("fields.net")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "method closed-form (T3-P1)\n"
            "dimension 2\n"
            "landmark \"Field 1\"\n"
            "landmark \"Field 4\"\n"
            "code \"Field 1\" 0,3\n"
            "code \"Field 2\" 1,2\n"
            "code \"Field 3\" 2,1\n"
            "code \"Field 4\" 3,0\n"
            "code \"Field 5\" 4,1\n"
            "code \"Field 6\" 1,4\n"
            "code \"Field 7\" 2,3\n"
            "code \"Field 8\" 3,2\n"
            "code \"Field 9\" 2,5\n"
            "code \"Field 10\" 3,5\n"
            "code \"Field 11\" 4,4\n"
            "code \"Field 12\" 4,3\n");
}
