#include <gtest/gtest.h>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout when `merge` is set.
CliRun run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string(FPNORM_CLI_PATH) + " " + args + (merge ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string fixture(const char* name) { return std::string(FPNORM_FIXTURE_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(CliPnorm, AMatrixAtOne) {
  const CliRun r = run("pnorm " + fixture("a_matrix.json") + " --p 1");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["lower"].get<double>(), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(j["upper"].get<double>(), std::sqrt(2.0), 1e-12);
}

TEST(CliPnorm, IdentityIsOne) {
  const CliRun r = run("pnorm " + fixture("identity3.json") + " --p 1.7");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["lower"].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["upper"].get<double>(), 1.0, 1e-12);
  EXPECT_TRUE(j["converged"].get<bool>());
}

TEST(CliPnorm, RandomMatrixAgainstStoredOracle) {
  const auto fx = nlohmann::json::parse(slurp(fixture("oracle_fixture.json")));
  const double oracle = fx["cases"][10]["oracle"]["1.3"].get<double>();
  const CliRun r = run("pnorm " + fixture("random3x3.json") + " --p 1.3");
  ASSERT_EQ(r.status, 0);
  EXPECT_NEAR(nlohmann::json::parse(r.out)["lower"].get<double>(), oracle, 1e-4);
}

TEST(CliPnorm, MalformedInputNamesTheField) {
  const CliRun r = run("pnorm " + fixture("ragged.json") + " --p 2", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("entries[1]"), std::string::npos) << r.out;
  EXPECT_NE(run("pnorm /nonexistent.json --p 2").status, 0);
  EXPECT_NE(run("pnorm " + fixture("a_matrix.json") + " --p 0.5").status, 0);
}

TEST(CliGamma, DefaultListPasses) {
  const CliRun r = run("gamma");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["rows"].size(), 8u);
}

TEST(CliQuotient, UnitLift) {
  const CliRun r = run("quotient --modulus 2 --coefficients 1,0 --p 1.5 --k 4 --window 8192");
  ASSERT_EQ(r.status, 0);
  const auto rec = nlohmann::json::parse(r.out)["records"][0];
  for (const char* key : {"target_lower", "target_upper", "lift_lower", "lift_upper_apriori"})
    EXPECT_NEAR(rec[key].get<double>(), 1.0, 1e-6) << key;
  EXPECT_TRUE(rec["sandwich_holds"].get<bool>());
}

TEST(CliQuotient, ComplexTwoTapSweep) {
  const CliRun r = run("quotient --modulus 2 --coefficients 1,i --p 3 --k 4,16 --window 16384");
  ASSERT_EQ(r.status, 0);
  const auto recs = nlohmann::json::parse(r.out)["records"];
  ASSERT_EQ(recs.size(), 2u);
  const double target = std::sqrt(2.0) * std::pow(2.0, 0.5 - 1.0 / 3.0);
  for (const auto& rec : recs) {
    EXPECT_NEAR(rec["target_lower"].get<double>(), target, 1e-6);
    EXPECT_TRUE(rec["sandwich_holds"].get<bool>());
  }
  EXPECT_LE(recs[1]["lift_upper_apriori"].get<double>(), recs[0]["lift_upper_apriori"].get<double>());
}

TEST(CliQuotient, RejectsBadInput) {
  EXPECT_NE(run("quotient --modulus 1 --coefficients 1 --p 2").status, 0);
  EXPECT_NE(run("quotient --modulus 2 --coefficients 1,2,3 --p 2").status, 0);
  EXPECT_NE(run("quotient --modulus 2 --coefficients 1,x --p 2").status, 0);
}

TEST(CliVerify, SuitesPass) {
  for (const char* suite : {"gamma", "theta", "shift --seed 42"}) {
    const CliRun r = run(std::string("verify ") + suite);
    EXPECT_EQ(r.status, 0) << suite;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_FALSE(j["checks"].empty());
  }
}

TEST(CliVerify, ReportsAreByteIdentical) {
  const std::string a = ::testing::TempDir() + "/shift_a.json", b = ::testing::TempDir() + "/shift_b.json";
  ASSERT_EQ(run("verify shift --seed 42 --report " + a).status, 0);
  ASSERT_EQ(run("verify shift --seed 42 --report " + b).status, 0);
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(slurp(a).empty());
}

TEST(CliVerify, UnknownSuiteIsAUsageError) {
  const CliRun r = run("verify nonsense", true);
  EXPECT_NE(r.status, 0);
  EXPECT_NE(r.out.find("nonsense"), std::string::npos) << r.out;
}
