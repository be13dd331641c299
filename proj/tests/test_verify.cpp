#include <gtest/gtest.h>

#include "clasp/verify.hpp"

using namespace clasp;

TEST(Verify, RankBoundExamples) {
  const Report r = check_rank_bound(parse_braid("s1 s2^-1", 3), ClosureKind::Braid);
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.bound["at_least"], 6);
  EXPECT_TRUE(check_rank_bound(parse_braid("s1^-1", 3), ClosureKind::Clasp).pass);
  EXPECT_THROW(check_rank_bound(parse_braid("s1", 3), ClosureKind::AugmentedBraid), InputError);
}

TEST(Verify, GapCheck) {
  EXPECT_TRUE(check_kh_akh_gap(parse_braid("s1 s2^-1", 3), ClosureKind::Braid).pass);
  EXPECT_TRUE(check_kh_akh_gap(parse_braid("s1^2 s2", 3), ClosureKind::Clasp).pass);
  EXPECT_THROW(check_kh_akh_gap(parse_braid("s1 s1^-1", 3), ClosureKind::Braid), InputError);
  EXPECT_THROW(check_kh_akh_gap(parse_braid("", 1), ClosureKind::Braid), InputError);
}

TEST(Verify, SkeinRecursion) {
  const Report r = check_skein_recursion(0, 3);
  EXPECT_TRUE(r.pass) << r.detail;
  EXPECT_EQ(r.measured["J(S)"], "t^-1*q^-2 + t^-1 + t + t*q^2");
  EXPECT_THROW(check_skein_recursion(3, 1), InputError);
}

TEST(Verify, MinimalRank) {
  // a sigma-positive braid of minimal rank
  const Report r = check_minimal_rank(parse_braid("s1 s2", 3));
  EXPECT_TRUE(r.pass);
  EXPECT_TRUE(r.measured["applicable"].get<bool>());
  // the trivial braid has rank 8 > 6
  EXPECT_FALSE(check_minimal_rank(parse_braid("", 3)).measured["applicable"].get<bool>());
  EXPECT_THROW(check_minimal_rank(parse_braid("s1", 2)), InputError);
}

TEST(Verify, ClosedFormTable) {
  // n = 1: V_3^0{2} + V_1^1{4}
  const HomologyTable t = closed_form_b_sigma1_sigma2n(1);
  EXPECT_EQ(t.total_free_rank(), 6u);
  EXPECT_EQ(t.free_rank(0, 5, 3), 1u);
  EXPECT_EQ(t.free_rank(1, 5, 1), 1u);
}

TEST(Verify, FixtureIdsAreUniqueAndKnown) {
  const std::vector<std::string> ids = fixture_ids();
  EXPECT_EQ(std::set<std::string>(ids.begin(), ids.end()).size(), ids.size());
  EXPECT_GE(ids.size(), 12u);
  EXPECT_THROW(check_table("no-such-table"), InputError);
}

TEST(Verify, SmallFixtures) {
  for (const char* id : {"b-sigma1-AKh-C", "b-sigma1inv-AKh-C", "J-S", "alexander"}) {
    const Report r = check_table(id);
    EXPECT_TRUE(r.pass) << id << '\n' << r.detail;
  }
}

TEST(Verify, ReportJsonShape) {
  const nlohmann::json j = check_table("J-S").to_json();
  for (const char* key : {"claim", "inputs", "measured", "bound", "pass"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.size(), 5u);
  EXPECT_TRUE(j["pass"].is_boolean());
}

TEST(Verify, FailingReportCarriesADiff) {
  fixtures::TableFixture wrong{"x", "", "s1", 3, ClosureKind::Braid, Ring::Q, true, "0 -3 -2 1\n"};
  const Report r = detail::check_table_fixture(wrong);
  EXPECT_FALSE(r.pass);
  EXPECT_NE(r.detail.find('*'), std::string::npos);
  EXPECT_EQ(r.to_text().rfind("FAIL x", 0), 0u);
}

TEST(Verify, SmallCorpusPasses) {
  const CorpusOptions opt{3, 10, 3, 1};
  EXPECT_EQ(corpus_words(opt).size(), 1u + 4 + 16 + 64 + 10);
  for (const Report& r : check_corpus(opt)) EXPECT_TRUE(r.pass) << r.claim << '\n' << r.detail;
}
