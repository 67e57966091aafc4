#include <gtest/gtest.h>

#include "icol/harness.hpp"

using namespace icol;

namespace {

SuiteOptions with_corpus(std::vector<std::string> lines) {
  SuiteOptions opt;
  opt.corpus_lines = std::move(lines);
  return opt;
}

void expect_all_pass(const SuiteReport& r) {
  EXPECT_FALSE(r.cases.empty());
  for (const auto& c : r.cases) EXPECT_EQ(c.status, CaseStatus::Pass) << r.suite << ": " << c.name << " " << c.observed;
}

}  // namespace

TEST(Suites, BipartiteExpansionDefault) {
  const auto r = run_suite("bipartite-expansion");
  expect_all_pass(r);
  bool saw_c4 = false;
  for (const auto& c : r.cases) saw_c4 = saw_c4 || (c.name == "K[C4](2,2,2,2)" && c.observed.starts_with("chi_i = 4"));
  EXPECT_TRUE(saw_c4);
}

TEST(Suites, ReductionOnCorpus) { expect_all_pass(run_suite("reduction", with_corpus({"P3 P2", "K3 P2", "Paw P2"}))); }

TEST(Suites, ColBoundSinglePair) {
  const auto r = run_suite("col-bound", with_corpus({"P2 P2  # K4"}));
  ASSERT_EQ(r.cases.size(), 1u);
  expect_all_pass(r);
}

TEST(Suites, EveryDefaultSuitePasses) {
  for (const auto& name : suite_names()) {
    const auto r = run_suite(name);
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(r.count(CaseStatus::SkipLimit), 0) << name;
  }
}

TEST(Suites, DefaultSizes) {
  EXPECT_EQ(run_suite("complement-duality").cases.size(), 50u);
  EXPECT_EQ(run_suite("closure").cases.size(), 200u);
  EXPECT_EQ(run_suite("union").cases.size(), 10u);
}

TEST(Suites, ByteStableReports) {
  for (const char* name : {"closure", "complement-duality", "lift"}) {
    EXPECT_EQ(report_to_json(run_suite(name)).dump(), report_to_json(run_suite(name)).dump()) << name;
  }
}

TEST(Suites, SeedChangesRandomCases) {
  SuiteOptions a, b;
  b.seed = a.seed + 1;
  EXPECT_NE(report_to_json(run_suite("closure", a)).dump(), report_to_json(run_suite("closure", b)).dump());
}

TEST(Suites, LimitBecomesSkip) {
  SuiteOptions opt = with_corpus({"C5 P2"});
  opt.limits.max_states = 1;
  const auto r = run_suite("col-bound", opt);
  ASSERT_EQ(r.cases.size(), 1u);
  EXPECT_EQ(r.cases[0].status, CaseStatus::SkipLimit);
  EXPECT_TRUE(r.ok());
}

TEST(Suites, FailuresAreReported) {
  // a repeated pair cannot grow, so the growth case fails
  const auto r = run_suite("col-gap", with_corpus({"K2 C5", "K2 C5"}));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.count(CaseStatus::Fail), 1);
  EXPECT_EQ(r.cases.back().status, CaseStatus::Fail);
}

TEST(Suites, Errors) {
  EXPECT_THROW(run_suite("thm-nothing"), InputError);
  EXPECT_THROW(run_suite("col-bound", with_corpus({"P2"})), InputError);
  EXPECT_THROW(run_suite("col-bound", with_corpus({"P2 ???"})), InputError);
  EXPECT_THROW(run_suite("bipartite-expansion", with_corpus({"C5 2"})), InputError);
  EXPECT_THROW(run_suite("union", with_corpus({"C7 C5"})), InputError);
  EXPECT_THROW(run_suite("col-bound", with_corpus({"C5 K3"})), InputError);
}

TEST(Suites, MonotonicityAuditFlagsWithoutFailing) {
  const auto r = run_suite("monotonicity-audit", with_corpus({"C5", "P3[K2]"}));
  EXPECT_EQ(r.cases.size(), 2u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.flagged(), 0);
}

TEST(Reports, CsvColumns) {
  const auto csv = report_to_csv(run_suite("col-bound", with_corpus({"P2 P2"})));
  EXPECT_TRUE(csv.starts_with("suite,case,expected,observed,status,millis\n"));
  EXPECT_NE(csv.find("col-bound,P2[P2] k=4,"), std::string::npos);
  EXPECT_NE(csv.find(",pass,0.000\n"), std::string::npos);
}

TEST(Reports, CsvQuotesCommas) {
  const auto csv = report_to_csv(run_suite("complement-duality", with_corpus({"P3 1,2,1"})));
  EXPECT_NE(csv.find("\"#00 P3 (1,2,1)\""), std::string::npos);
}

TEST(Reports, JsonSummary) {
  const auto j = report_to_json(run_suite("col-bound"));
  EXPECT_EQ(j["suite"], "col-bound");
  EXPECT_EQ(j["summary"]["pass"], 6);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["cases"][0]["status"], "pass");
}
