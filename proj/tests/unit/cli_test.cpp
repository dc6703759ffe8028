#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace ngraph::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<const char*> args) {
  args.insert(args.begin(), "ngraph");
  std::ostringstream out, err;
  const int status = run(static_cast<int>(args.size()), args.data(), out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, GraphWorkedExample) {
  const auto r = invoke({"graph", "--set", "m=13;S=3,2,20", "--parts", "55,41,33,29,20,15"});
  ASSERT_EQ(r.status, kOk) << r.err;
  EXPECT_EQ(r.out,
            "N-form: (55,41,29,15,33,20)_N\n"
            "13 13 13 13 3\n13 13 13 2\n13 13 3\n13 2\n13 20\n20\n"
            "d_N = 3\n"
            "h_N = (127,63,3)\n");
}

TEST(Cli, GraphJson) {
  const auto r = invoke({"graph", "--set", "m=3;S=3,2,1", "--parts", "9,8,6,4", "--format", "json"});
  ASSERT_EQ(r.status, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["h_N"].dump(), "[18,9]");
  EXPECT_EQ(j["durfee"], 2);
  EXPECT_EQ(j["graph"].dump(), "[[3,3,3],[3,3,2],[3,3],[3,1]]");
}

TEST(Cli, CheckSet) {
  auto r = invoke({"check-set", "--set", "m=15;S=1,6,19", "--predicate", "sum-free-sidon"});
  EXPECT_EQ(r.status, kOk);
  EXPECT_EQ(r.out, "sum-free-sidon (m=15;S=1,6,19): true\n");
  r = invoke({"check-set", "--set", "m=11;S=1,6,19", "--predicate", "sum-free", "--format", "json"});
  EXPECT_EQ(r.out, R"({"predicate":"sum-free","result":false,"system":"m=11;S=1,6,19"})" "\n");
}

TEST(Cli, Count) {
  const auto r = invoke({"count", "--set", "m=3;S=1", "--n", "5", "--format", "csv"});
  EXPECT_EQ(r.out, "n,p_A\n5,1\n");
}

TEST(Cli, EnumerateAAndH) {
  auto r = invoke({"enumerate", "A", "--set", "m=3;S=1", "--n", "5"});
  EXPECT_EQ(r.out, "(4,1)_N\n");
  r = invoke({"enumerate", "H", "--set", "m=3;S=1", "--n", "5", "--format", "csv"});
  EXPECT_EQ(r.out, "n,parts,vs,classes,e_prime\n5,5,1,B,0\n");
}

TEST(Cli, VerifySingle) {
  const auto r = invoke({"verify", "--set", "m=2;S=1", "--mode", "single", "--n-max", "200"});
  EXPECT_EQ(r.status, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("all_pass=true"), std::string::npos);
}

TEST(Cli, VerifyCsvIsByteStable) {
  const std::vector<const char*> args{"verify", "--set", "m=12;S=1,3,5", "--mode", "sumfree",
                                      "--n-max", "40", "--format", "csv"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.status, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.substr(0, 22), "n,lhs,rhs,pass\n0,1,1,t");
}

TEST(Cli, VerifyJsonVerboseHasCandidates) {
  const auto r = invoke({"verify", "--set", "m=3;S=1", "--mode", "sidon", "--n-max", "5",
                         "--format", "json", "--verbose"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["rows"][5]["candidates"][0]["parts"].dump(), "[5]");
}

TEST(Cli, FiberExample) {
  const auto r = invoke({"fiber", "--set", "m=15;S=1,6,19", "--target", "141,67,34"});
  ASSERT_EQ(r.status, kOk) << r.err;
  EXPECT_NE(r.out.find("reconstructed (2): (96,61,64,21)_N (96,66,64,16)_N"), std::string::npos);
  EXPECT_NE(r.out.find("agree=true"), std::string::npos);
}

TEST(Cli, Search) {
  const auto r = invoke({"search", "--m", "5", "--len", "1", "--bound", "4", "--predicate",
                         "sum-free-sidon", "--format", "json"});
  EXPECT_EQ(r.out, "[[1],[2],[3],[4]]\n");
}

TEST(Cli, OutputFile) {
  const std::string path = ::testing::TempDir() + "ngraph_cli_out.txt";
  const auto r = invoke({"count", "--set", "m=3;S=1", "--n", "5", "--output", path.c_str()});
  EXPECT_EQ(r.status, kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "p_A(5) = 1");
}

TEST(Cli, UsageErrorsNameTheFlag) {
  auto r = invoke({"count", "--set", "m=13;S=3,16", "--n", "5"});
  EXPECT_EQ(r.status, kUsage);
  EXPECT_EQ(r.err.rfind("error: --set:", 0), 0u) << r.err;

  r = invoke({"graph", "--set", "m=13;S=3,2,20", "--parts", "55,5"});
  EXPECT_EQ(r.status, kUsage);
  EXPECT_EQ(r.err.rfind("error: --parts:", 0), 0u) << r.err;

  r = invoke({"verify", "--set", "m=12;S=1,3,5", "--mode", "sidon"});
  EXPECT_EQ(r.status, kUsage);
  EXPECT_NE(r.err.find("sidon"), std::string::npos);

  r = invoke({"fiber", "--set", "m=15;S=1,6,19", "--target", "141,5"});
  EXPECT_EQ(r.status, kUsage);
  EXPECT_EQ(r.err.rfind("error: --target:", 0), 0u) << r.err;

  r = invoke({"count", "--set", "m=3;S=1", "--n", "5", "--bogus"});
  EXPECT_EQ(r.status, kUsage);
  EXPECT_NE(r.err.find("--bogus"), std::string::npos);

  r = invoke({"search", "--m", "5", "--len", "1", "--bound", "4", "--predicate", "nope"});
  EXPECT_EQ(r.status, kUsage);

  EXPECT_EQ(invoke({}).status, kUsage);
  EXPECT_EQ(invoke({"--help"}).status, kOk);
}

}  // namespace
}  // namespace ngraph::cli
