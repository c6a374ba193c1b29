#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/oracle.hpp"
#include "prc/scoring.hpp"
#include "test_util.hpp"

#include <random>

using namespace prc;

namespace {

const ClassScheme kSixPr = ClassScheme::six_pr();

std::vector<ScoringPolicy> all_policies() {
  std::vector<ScoringPolicy> policies;
  for (auto rule : {CountingRule::StrictLess, CountingRule::InclusiveRank,
                    CountingRule::PlusPointNine}) {
    for (auto ties : {TiePolicy::LowestRank, TiePolicy::HighestRank,
                      TiePolicy::AverageRank, TiePolicy::AverageWeight}) {
      policies.push_back(ScoringPolicy::discrete(rule, ties));
    }
  }
  policies.push_back(ScoringPolicy::fractional());
  return policies;
}

void check_reports_equal(const IndicatorReport& got,
                         const IndicatorReport& want) {
  CHECK(got.total_i3 == want.total_i3);
  CHECK(got.total_r == want.total_r);
  CHECK(got.paper_count == want.paper_count);
  CHECK(got.citation_count == want.citation_count);
  REQUIRE(got.per_owner.size() == want.per_owner.size());
  for (const auto& [owner, stats] : want.per_owner) {
    const OwnerStats& g = got.per_owner.at(owner);
    CHECK(g.paper_count == stats.paper_count);
    CHECK(g.citation_count == stats.citation_count);
    CHECK(g.i3 == stats.i3);
    CHECK(g.r == stats.r);
    CHECK(g.rank == stats.rank);
  }
}

}  // namespace

TEST_CASE("brute-force fractional weights approach the exact values") {
  OracleConfig config;
  config.slices_per_paper = 20'000;
  const auto policy = ScoringPolicy::fractional();
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> n_dist(1, 300);
  for (int round = 0; round < 20; ++round) {
    const std::int64_t n = n_dist(rng);
    std::uniform_int_distribution<std::int64_t> r_dist(1, n);
    const std::int64_t rank = r_dist(rng);
    // exact weight via a dataset of n distinct citation counts
    Dataset d;
    d.label = "frac";
    for (std::int64_t i = 1; i <= n; ++i) {
      d.papers.push_back(Paper{i, kUnattributed, i});
    }
    const auto weighted = weigh(d, kSixPr, policy);
    Rational exact(0);
    for (const WeightedPaper& wp : weighted) {
      if (wp.paper.citations == rank) exact = wp.weight;
    }
    const Rational approx =
        fractional_weight_bruteforce(rank, n, kSixPr, config);
    Rational diff = exact - approx;
    if (diff < 0) diff = -diff;
    CHECK(diff <= Rational(5, config.slices_per_paper));
  }
}

TEST_CASE("brute-force fractional weight matches a hand value exactly "
          "when the slices align") {
  // top rank of 40: classes split at 97.5 and 99 inside (97.5, 100]
  OracleConfig config;
  config.slices_per_paper = 10'000;
  CHECK(fractional_weight_bruteforce(40, 40, kSixPr, config) ==
        Rational(27, 5));
  CHECK(fractional_weight_bruteforce(1, 40, kSixPr, config) == 1);
}

TEST_CASE("weights are order independent per the permutation oracle") {
  OracleConfig config;
  config.permutations = 20;
  std::mt19937_64 rng(13);
  for (int round = 0; round < 10; ++round) {
    const Dataset d = testutil::random_dataset(rng, 60);
    config.seed = round;
    for (const ScoringPolicy& policy : all_policies()) {
      CHECK(tie_order_oracle(d, kSixPr, policy, config));
    }
  }
}

TEST_CASE("the oracle report equals the production report exactly") {
  std::mt19937_64 rng(19);
  const auto policies = all_policies();
  for (int round = 0; round < 60; ++round) {
    const Dataset d = testutil::random_dataset(rng, 120);
    for (const ScoringPolicy& policy : policies) {
      check_reports_equal(per_owner_report(d, kSixPr, policy),
                          report_oracle(d, kSixPr, policy));
    }
  }
}

TEST_CASE("the oracle reproduces the A1 and B1 fixture values") {
  const auto lowest =
      ScoringPolicy::discrete(CountingRule::StrictLess, TiePolicy::LowestRank);
  const Dataset a1 = testutil::from_bins(
      {{0, 20}, {1, 10}, {3, 6}, {5, 2}, {7, 2}}, "A1");
  const IndicatorReport rep = report_oracle(a1, kSixPr, lowest);
  CHECK(rep.total_i3 == 76);
  CHECK(rep.total_r == Rational(19, 10));

  Dataset b1 = testutil::from_bins({{1, 7}}, "B1", "L");
  for (int i = 0; i < 4; ++i) b1.papers.push_back(Paper{8 + i, "M", 2});
  for (int i = 0; i < 4; ++i) b1.papers.push_back(Paper{12 + i, "H", 3});
  const IndicatorReport repb = report_oracle(b1, kSixPr, lowest);
  CHECK(repb.total_i3 == 19);
  CHECK(repb.per_owner.at("H").rank == 1);
  CHECK(repb.per_owner.at("M").rank == Rational(5, 2));
  CHECK(repb.per_owner.at("L").rank == Rational(5, 2));
}
