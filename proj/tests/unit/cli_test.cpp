#include "pseudocurve/cli/cli.hpp"
#include "pseudocurve/cli/verify.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <sstream>

namespace pseudocurve::cli {
namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> argv) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = run_subcommand(argv, out, err);
  return {status, out.str(), err.str()};
}

TEST(Cli, FeasibilityAnchor) {
  const auto r = run({"feasibility", "--cp2-degree", "6", "--json"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("obstructed"), true);
  EXPECT_EQ(j.at("worst_count"), 16);
  EXPECT_EQ(j.at("required"), 17);
  EXPECT_TRUE(j.contains("anchors"));
}

TEST(Cli, CuspErrors) {
  const auto bad = run({"cusp", "--type", "2,4"});
  EXPECT_EQ(bad.status, kExitDomainError);
  EXPECT_NE(bad.err.find("not a cusp type"), std::string::npos) << bad.err;
  const auto ok = run({"cusp", "--type", "4,6,7", "--json"});
  ASSERT_EQ(ok.status, kExitOk) << ok.err;
  const auto j = nlohmann::json::parse(ok.out);
  EXPECT_EQ(j.at("nodal_number_formula"), 2 * j.at("semigroup_gaps").get<int>());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({"cusp", "--bogus"}).status, kExitUsage);
  EXPECT_EQ(run({"nonsense"}).status, kExitUsage);
  EXPECT_EQ(run({"saddle", "--k", "2"}).status, kExitUsage);
  EXPECT_EQ(run({"saddle", "--k", "x", "--l", "0", "--poly", "1"}).status, kExitUsage);
}

TEST(Cli, SaddleAndIndex) {
  const auto s = run({"saddle", "--k", "3", "--l", "1", "--poly", "2,1", "--json"});
  ASSERT_EQ(s.status, kExitOk) << s.err;
  const auto j = nlohmann::json::parse(s.out);
  EXPECT_EQ(j.at("inertia").at("ind_plus"), 2);
  EXPECT_EQ(j.at("pass"), true);
  EXPECT_EQ(run({"saddle", "--k", "3", "--l", "1", "--poly", "0,1"}).status, kExitDomainError);

  const auto i = run({"index", "--mu", "9", "--n", "2", "--genus", "0", "--marked", "8", "--json"});
  ASSERT_EQ(i.status, kExitOk) << i.err;
  EXPECT_EQ(nlohmann::json::parse(i.out).at("marked_moduli_index"), 0);
}

TEST(Cli, NodeAndDecay) {
  const auto n = run({"node", "--lambda", "0.1", "--check", "volume", "--grid", "50", "--json"});
  ASSERT_EQ(n.status, kExitOk) << n.err;
  const auto d = run({"decay", "--modes", "2:1,0", "--length", "10", "--json"});
  ASSERT_EQ(d.status, kExitOk) << d.err;
  EXPECT_EQ(nlohmann::json::parse(d.out).at("pass"), true);
  EXPECT_EQ(run({"node", "--lambda", "2"}).status, kExitDomainError);
}

TEST(Cli, TextOutputIsFlattened) {
  const auto r = run({"feasibility", "--cp2-degree", "7"});
  ASSERT_EQ(r.status, kExitOk);
  EXPECT_NE(r.out.find("obstructed: false"), std::string::npos) << r.out;
}

TEST(Cli, VerifyIsDeterministic) {
  const auto a = run({"verify", "--suite", "saddle,cosh", "--seed", "7", "--cases", "5", "--jobs", "2"});
  const auto b = run({"verify", "--suite", "saddle,cosh", "--seed", "7", "--cases", "5", "--jobs", "1"});
  ASSERT_EQ(a.status, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j.at("cases_failed"), 0);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).status, kExitUsage);
}

TEST(Verify, SuiteListAndCertificateShape) {
  const auto names = suite_names();
  EXPECT_GE(names.size(), 10u);
  const auto cert = run_suite("cp2", {});
  EXPECT_GT(cert.cases_run, 0);
  EXPECT_EQ(cert.cases_failed(), 0);
  const auto j = nlohmann::json::parse(certificate_json({cert}));
  EXPECT_EQ(j.at("suite"), "cp2");
  EXPECT_TRUE(j.at("versions").contains("pseudocurve"));
  EXPECT_THROW(run_suite("nope", {}), std::invalid_argument);
}

}  // namespace
}  // namespace pseudocurve::cli
