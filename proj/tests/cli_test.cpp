#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace idist::cli {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, DistTable) {
  auto r = run_cli({"dist", "--m", "3", "--exp", "11"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("234"), std::string::npos);
  EXPECT_NE(r.out.find("378"), std::string::npos);
  EXPECT_NE(r.out.find("117"), std::string::npos);
}

TEST(Cli, DistJson) {
  auto r = run_cli({"dist", "--m", "3", "--exp", "19", "--json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["v"], json::parse(R"({"0": 234, "1": 378, "3": 117})"));
  EXPECT_EQ(j["matches_target"], true);
  auto p = run_cli({"dist", "--m", "1", "--poly", "[0, 0, 1]", "--json"});
  ASSERT_EQ(p.code, kExitPass) << p.err;
  EXPECT_EQ(json::parse(p.out)["v"], json::parse(R"({"0": 3, "1": 3, "2": 3})"));
}

TEST(Cli, MultDist) {
  auto r = run_cli({"mult-dist", "--m", "3", "--exp", "11", "--b", "0", "--json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(json::parse(r.out)["M"], json::parse(R"({"1": 27})"));
}

TEST(Cli, Cubic) {
  auto r = run_cli({"cubic", "--m", "1", "--a", "2", "--b", "1"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_EQ(r.out, "(3)\n");
  auto j = run_cli({"cubic", "--m", "1", "--a", "1", "--b", "1", "--json"});
  EXPECT_EQ(json::parse(j.out)["type"], "(1,2)");
  EXPECT_EQ(json::parse(j.out)["roots"], json::parse("[1]"));
}

TEST(Cli, Resultant) {
  auto r = run_cli({"resultant", "--m", "1"}, R"({"u": [2, 1], "v": [1, 1]})");
  ASSERT_EQ(r.code, kExitPass) << r.err;
  EXPECT_EQ(r.out, "2\n");
  auto y = run_cli({"resultant", "--m", "1", "--json"},
                   R"({"F": [[0, 2], [1]], "G": [[0, 2], [], [1]]})");
  ASSERT_EQ(y.code, kExitPass) << y.err;
  EXPECT_EQ(json::parse(y.out)["resultant"], json::parse("[0, 2, 1]"));
  EXPECT_EQ(run_cli({"resultant", "--m", "1"}, "not json").code, kExitUsage);
  EXPECT_EQ(run_cli({"resultant", "--m", "1"}, R"({"u": [1]})").code, kExitUsage);
}

TEST(Cli, VerifyJson) {
  auto r = run_cli({"verify", "--case", "i", "--m", "3", "--json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["overall"], "pass");
  EXPECT_EQ(j["v"], json::parse(R"({"0": 234, "1": 378, "3": 117})"));
  EXPECT_EQ(j["version"], 1);
  EXPECT_FALSE(j["checks"][0].contains("seconds"));
  auto t = run_cli({"verify", "--case", "i", "--m", "3", "--json", "--timings"});
  EXPECT_TRUE(json::parse(t.out)["checks"][0].contains("seconds"));
}

TEST(Cli, VerifyOutputIndependentOfWorkers) {
  auto a = run_cli({"verify", "--case", "ii", "--m", "5", "--json", "--workers", "1"});
  auto b = run_cli({"verify", "--case", "ii", "--m", "5", "--json", "--workers", "4"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, VerifyAll) {
  auto r = run_cli({"verify", "--all", "--max-m", "5", "--json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["reports"].size(), 4u);
  EXPECT_EQ(j["overall"], "pass");
}

TEST(Cli, VerifySkippedExitsNonZero) {
  auto r = run_cli({"verify", "--case", "i", "--m", "11", "--json"});
  EXPECT_EQ(r.code, kExitFail);
  EXPECT_EQ(json::parse(r.out)["overall"], "skipped");
}

TEST(Cli, GcdScan) {
  auto r = run_cli({"gcd-scan", "--case", "ii", "--max-m", "9", "--json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = json::parse(r.out);
  ASSERT_EQ(j["rows"].size(), 5u);
  for (const auto& row : j["rows"]) {
    EXPECT_EQ(row["gcd_d_minus_1"], 2);
    EXPECT_EQ(row["gcd_d"], 1);
  }
  EXPECT_EQ(run_cli({"gcd-scan"}).code, kExitPass);
}

TEST(Cli, TwoToOne) {
  auto k = run_cli({"two-to-one", "--m", "3", "--exp", "11", "--json"});
  EXPECT_EQ(k.code, kExitPass);
  EXPECT_EQ(json::parse(k.out)["holds"], true);
  EXPECT_EQ(run_cli({"two-to-one", "--m", "3", "--exp", "2"}).code, kExitFail);
  auto m = run_cli({"two-to-one", "--m", "3", "--num", "[0, 0, 1]", "--exclude", "0", "--json"});
  EXPECT_EQ(m.code, kExitPass);
  EXPECT_EQ(json::parse(m.out)["image_size"], 13);
  auto id = run_cli({"two-to-one", "--m", "3", "--num", "[0, 1]", "--exclude", "1"});
  EXPECT_EQ(id.code, kExitFail);
  EXPECT_NE(id.out.find("witness"), std::string::npos);
  EXPECT_EQ(run_cli({"two-to-one", "--m", "3", "--num", "[0, 1]"}).code, kExitUsage);
}

TEST(Cli, FieldInfoAndModulusOverride) {
  auto r = run_cli({"field-info", "--m", "3", "--modulus", "[1, 2, 0, 1]", "--json"});
  ASSERT_EQ(r.code, kExitPass) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["modulus"], json::parse("[1, 2, 0, 1]"));
  EXPECT_EQ(j["minus_one_is_square"], false);

  const std::string path = ::testing::TempDir() + "idist_modulus.json";
  {
    std::ofstream f(path);
    f << R"({"p": 3, "m": 3, "modulus": [1, 2, 0, 1]})";
  }
  auto file = run_cli({"field-info", "--m", "3", "--modulus", path, "--json"});
  ASSERT_EQ(file.code, kExitPass) << file.err;
  EXPECT_EQ(json::parse(file.out)["modulus"], json::parse("[1, 2, 0, 1]"));
  std::remove(path.c_str());
}

TEST(Cli, UsageErrors) {
  auto unknown = run_cli({"dist", "--m", "3", "--exp", "11", "--bogus"});
  EXPECT_EQ(unknown.code, kExitUsage);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"nonsense"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--case", "i", "--m", "4"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify", "--case", "iii", "--m", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"cubic", "--m", "3", "--a", "27", "--b", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"field-info", "--m", "3", "--modulus", "[0, 1, 2, 1]"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dist", "--m", "3"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dist", "--m", "3", "--exp", "2", "--workers", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"dist", "--m", "3", "--exp", "2", "--json", "--table"}).code, kExitUsage);
}

TEST(Cli, CapErrors) {
  auto r = run_cli({"dist", "--m", "10", "--exp", "2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST(Cli, Help) {
  auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace idist::cli
