#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "ellgauss/cli.hpp"

namespace ellgauss {
namespace {

using report::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "ellgauss");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& s) {
  std::vector<json> v;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) v.push_back(json::parse(line));
  return v;
}

class EnvGuard {
 public:
  explicit EnvGuard(const char* value) { ::setenv(kPrecisionEnv, value, 1); }
  ~EnvGuard() { ::unsetenv(kPrecisionEnv); }
};

TEST(Cli, TablesCsvAndMarkdown) {
  CliRun csv = run({"tables", "--format", "csv"});
  EXPECT_EQ(csv.code, kExitPass);
  EXPECT_NE(csv.out.find("\n5,-10/21\n"), std::string::npos);
  EXPECT_NE(csv.out.find("\n67,1710106255619904534930025572360427397429088633914126219002154844160000000000000\n"),
            std::string::npos);
  CliRun md = run({"tables"});
  EXPECT_EQ(md.code, kExitPass);
  EXPECT_NE(md.out.find("| 7 | 160 |"), std::string::npos);
}

TEST(Cli, VerifyEmitsOneRecordPerPrime) {
  CliRun r = run({"verify", "--lmax", "40"});
  EXPECT_EQ(r.code, kExitPass) << r.err;
  auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 5u);  // 7 13 19 31 37
  std::map<unsigned long, json> by;
  for (const auto& j : recs) by[j.at("ell").get<unsigned long>()] = j;
  EXPECT_EQ(by[7].at("status"), "pass");
  EXPECT_EQ(by[7].at("alpha"), (json{{"a", 0}, {"b", 1}}));
  EXPECT_EQ(by[13].at("alpha"), (json{{"a", 1}, {"b", 1}}));
  EXPECT_EQ(by[31].at("status"), "pass");
  for (unsigned long skip : {19ul, 37ul}) {
    EXPECT_EQ(by[skip].at("status"), "skip");
    EXPECT_EQ(by[skip].at("reason"), "excluded residue class");
  }
  EXPECT_EQ(by[13].at("congruence").at("bh_residue"), 4);
  EXPECT_TRUE(by[13].at("local_data").at("tate_agrees").get<bool>());
}

TEST(Cli, VerifyRecordSkipsNonSplit) {
  RunConfig cfg;
  json r = verify_record(11, cfg);
  EXPECT_EQ(r.at("status"), "skip");
  EXPECT_EQ(r.at("reason"), "not a split prime");
}

TEST(Cli, VerifyParallelMatchesSerial) {
  CliRun a = run({"verify", "--lmax", "100"});
  CliRun b = run({"verify", "--lmax", "100", "--jobs", "4"});
  EXPECT_EQ(a.code, kExitPass);
  EXPECT_EQ(a.out, b.out);
  CliRun c = run({"verify", "--lmax", "100", "--format", "csv"});
  EXPECT_NE(c.out.find("ell,status,alpha,predicted_sha\n7,pass,ρ,1\n"), std::string::npos) << c.out;
}

TEST(Cli, SingleInspectors) {
  CliRun g = run({"gauss", "--ell", "7"});
  EXPECT_EQ(g.code, kExitPass);
  EXPECT_NE(g.out.find("alpha = ρ\n"), std::string::npos);
  CliRun gj = run({"gauss", "--ell", "13", "--format", "json"});
  EXPECT_EQ(json::parse(gj.out).at("alpha"), (json{{"a", 1}, {"b", 1}}));
  CliRun s = run({"sha", "--ell", "7", "--format", "json"});
  EXPECT_EQ(s.code, kExitPass);
  EXPECT_EQ(json::parse(s.out).at("sha").at("predicted_sha"), "1");
  EXPECT_EQ(json::parse(s.out).at("sha").at("label"), "BSD-conditional exact value");
  CliRun c = run({"curve", "--ell", "13", "--prime", "5", "--format", "json"});
  EXPECT_EQ(c.code, kExitPass);
  json counts = json::parse(c.out).at("point_counts");
  ASSERT_EQ(counts.size(), 1u);
  EXPECT_EQ(counts[0].at("brute"), counts[0].at("jacobi"));
  EXPECT_EQ(json::parse(c.out).at("torsion_order"), 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"gauss"}).code, kExitUsage);
  EXPECT_EQ(run({"gauss", "--ell", "19"}).code, kExitUsage);
  EXPECT_EQ(run({"gauss", "--ell", "11"}).code, kExitUsage);
  EXPECT_EQ(run({"gauss", "--ell", "8"}).code, kExitUsage);
  EXPECT_EQ(run({"gauss", "--ell", "7", "--prec", "30"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--lmax", "5"}).code, kExitUsage);
  EXPECT_EQ(run({"tables", "--format", "yaml"}).code, kExitUsage);
  EXPECT_EQ(run({"curve", "--ell", "7", "--prime", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitPass);
}

TEST(Cli, PrecisionFromEnvironment) {
  {
    EnvGuard env("30");
    EXPECT_EQ(run({"gauss", "--ell", "7"}).code, kExitUsage);
  }
  {
    EnvGuard env("abc");
    EXPECT_EQ(run({"gauss", "--ell", "7"}).code, kExitUsage);
  }
  {
    EnvGuard env("512");
    CliRun r = run({"gauss", "--ell", "7", "--format", "json"});
    EXPECT_EQ(r.code, kExitPass);
    EXPECT_GE(json::parse(r.out).at("precision_used").get<long>(), 512);
    CliRun o = run({"gauss", "--ell", "7", "--format", "json", "--prec", "128"});
    EXPECT_LT(json::parse(o.out).at("precision_used").get<long>(), 512);
  }
}

TEST(Cli, OutputFile) {
  auto path = std::filesystem::temp_directory_path() / "ellgauss_cli_test.csv";
  CliRun r = run({"tables", "--format", "csv", "--out", path.string()});
  EXPECT_EQ(r.code, kExitPass);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(first, "n,c_n");
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace ellgauss
