#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "prc/scoring.hpp"
#include "test_util.hpp"

#include <algorithm>
#include <random>

using namespace prc;
using testutil::from_bins;

namespace {

const ClassScheme kSixPr = ClassScheme::six_pr();

Dataset a1() {
  return from_bins({{0, 20}, {1, 10}, {3, 6}, {5, 2}, {7, 2}}, "A1");
}

Dataset a2() {
  return from_bins({{0, 19}, {1, 11}, {3, 6}, {5, 2}, {7, 2}}, "A2");
}

Dataset b1() {
  Dataset d = from_bins({{1, 7}}, "B1", "L");
  for (int i = 0; i < 4; ++i) d.papers.push_back(Paper{8 + i, "M", 2});
  for (int i = 0; i < 4; ++i) d.papers.push_back(Paper{12 + i, "H", 3});
  return d;
}

ScoringPolicy lowest() {
  return ScoringPolicy::discrete(CountingRule::StrictLess,
                                 TiePolicy::LowestRank);
}

Rational weight_of(const std::vector<WeightedPaper>& weighted,
                   std::int64_t citations) {
  for (const WeightedPaper& wp : weighted) {
    if (wp.paper.citations == citations) return wp.weight;
  }
  FAIL("no paper with that citation count");
  return Rational(0);
}

const WeightedPaper& entry_of(const std::vector<WeightedPaper>& weighted,
                              std::int64_t citations) {
  for (const WeightedPaper& wp : weighted) {
    if (wp.paper.citations == citations) return wp;
  }
  FAIL("no paper with that citation count");
  return weighted.front();
}

}  // namespace

TEST_CASE("A1 under strict-less/lowest reproduces the per-bin table") {
  const auto weighted = weigh(a1(), kSixPr, lowest());
  const struct {
    std::int64_t citations;
    std::int64_t percentage;
    std::size_t class_index;
    std::int64_t weight;
  } expected[] = {
      {0, 0, 0, 1}, {1, 50, 1, 2}, {3, 75, 2, 3}, {5, 90, 3, 4}, {7, 95, 4, 5},
  };
  for (const auto& row : expected) {
    const WeightedPaper& wp = entry_of(weighted, row.citations);
    CHECK(wp.percentage == row.percentage);
    CHECK(wp.class_index == row.class_index);
    CHECK(wp.weight == row.weight);
  }
  CHECK(i3(a1(), kSixPr, lowest()) == 76);
}

TEST_CASE("A2 under strict-less/lowest: the singly cited group drops a class") {
  const auto weighted = weigh(a2(), kSixPr, lowest());
  const WeightedPaper& wp = entry_of(weighted, 1);
  CHECK(wp.percentage == Rational(95, 2));  // 47.5
  CHECK(wp.class_index == 0);
  CHECK(wp.weight == 1);
  CHECK(i3(a2(), kSixPr, lowest()) == 66);
  CHECK(r_indicator(a2(), kSixPr, lowest()) == Rational(33, 20));
}

TEST_CASE("A2 under average-weight: 11 tied papers share 21/11") {
  const auto policy = ScoringPolicy::discrete(CountingRule::StrictLess,
                                              TiePolicy::AverageWeight);
  const auto weighted = weigh(a2(), kSixPr, policy);
  CHECK(weight_of(weighted, 1) == Rational(21, 11));
  CHECK(i3(a2(), kSixPr, policy) == 76);
}

TEST_CASE("highest-rank variants") {
  const auto policy = ScoringPolicy::discrete(CountingRule::StrictLess,
                                              TiePolicy::HighestRank);
  CHECK(i3(a2(), kSixPr, policy) == 77);
  // 21 uncited / 9 singly cited: benefit of the doubt lifts the whole
  // uncited block into the second class.
  const Dataset variant =
      from_bins({{0, 21}, {1, 9}, {3, 6}, {5, 2}, {7, 2}}, "A1v");
  CHECK(i3(variant, kSixPr, policy) == 96);
}

TEST_CASE("inclusive rank with averaged weights") {
  const auto policy = ScoringPolicy::discrete(CountingRule::InclusiveRank,
                                              TiePolicy::AverageWeight);
  CHECK(i3(a1(), kSixPr, policy) == 77);
  CHECK(r_indicator(a1(), kSixPr, policy) == Rational(77, 40));
}

TEST_CASE("inclusive rank puts the unique most cited paper in the top class") {
  std::mt19937_64 rng(3);
  const auto policy = ScoringPolicy::discrete(CountingRule::InclusiveRank,
                                              TiePolicy::LowestRank);
  for (int round = 0; round < 100; ++round) {
    Dataset d = testutil::random_dataset(rng, 60);
    // make the maximum unique
    std::int64_t max_c = 0;
    for (const Paper& p : d.papers) max_c = std::max(max_c, p.citations);
    d.papers.front().citations = max_c + 1;
    const auto weighted = weigh(d, kSixPr, policy);
    const WeightedPaper& top = entry_of(weighted, max_c + 1);
    CHECK(top.class_index == kSixPr.class_count() - 1);
  }
}

TEST_CASE("averaged ranks floor the percentiles before averaging") {
  const auto policy = ScoringPolicy::discrete(CountingRule::StrictLess,
                                              TiePolicy::AverageRank);
  // 12 uncited + 18 singly cited (rest as A1)
  const Dataset before =
      from_bins({{0, 12}, {1, 18}, {3, 6}, {5, 2}, {7, 2}}, "P1");
  const auto weighted_before = weigh(before, kSixPr, policy);
  const WeightedPaper& tied_before = entry_of(weighted_before, 1);
  CHECK(tied_before.percentage == 51);  // average of the floored percentiles
  CHECK(tied_before.weight == 2);
  // group contributions: 18 * 2 + 12 * 1
  Rational uncited_sum(0), singly_sum(0);
  for (const WeightedPaper& wp : weighted_before) {
    if (wp.paper.citations == 0) uncited_sum += wp.weight;
    if (wp.paper.citations == 1) singly_sum += wp.weight;
  }
  CHECK(singly_sum == 36);
  CHECK(uncited_sum == 12);

  // one more citation: the 19-strong tied group averages 945/19 ~ 49.74
  const Dataset after =
      from_bins({{0, 11}, {1, 19}, {3, 6}, {5, 2}, {7, 2}}, "P2");
  const auto weighted_after = weigh(after, kSixPr, policy);
  const WeightedPaper& tied_after = entry_of(weighted_after, 1);
  CHECK(tied_after.percentage == Rational(945, 19));
  CHECK(tied_after.weight == 1);
}

TEST_CASE("plus-0.9 pushes the 110th of 111 papers into the top class") {
  const auto policy = ScoringPolicy::discrete(CountingRule::PlusPointNine,
                                              TiePolicy::LowestRank);
  const Dataset d = from_bins({{0, 109}, {1, 1}, {2, 1}}, "plus");
  const auto weighted = weigh(d, kSixPr, policy);
  const WeightedPaper& wp = entry_of(weighted, 1);  // n_< = 109
  CHECK(wp.percentage == Rational(109'900, 111 * 10));
  CHECK(wp.percentage > 99);
  CHECK(wp.class_index == kSixPr.class_count() - 1);
}

TEST_CASE("fractional weights") {
  const auto policy = ScoringPolicy::fractional();
  // top of 40: interval (97.5, 100], weight (1.5*5 + 1*6)/2.5 = 5.4
  Dataset forty = from_bins({{0, 39}, {10, 1}}, "f40");
  CHECK(weight_of(weigh(forty, kSixPr, policy), 10) == Rational(27, 5));
  // top of 16: contribution (1.25% * 4 + 4% * 5 + 1% * 6) = 0.31
  Dataset sixteen = from_bins({{0, 15}, {10, 1}}, "f16");
  const Rational top16 = weight_of(weigh(sixteen, kSixPr, policy), 10);
  CHECK(top16 / 16 == Rational(31, 100));
  // the 39 tied uncited papers share the mean over (0, 97.5]
  CHECK(weight_of(weigh(forty, kSixPr, policy), 0) == Rational(71, 39));
  // an untied rank 1 of 40 sits wholly inside class 1
  Dataset distinct;
  distinct.label = "d40";
  for (std::int64_t i = 0; i < 40; ++i) {
    distinct.papers.push_back(Paper{i + 1, kUnattributed, i});
  }
  CHECK(weight_of(weigh(distinct, kSixPr, policy), 0) == 1);
}

TEST_CASE("fractional total equals n_tot times the scheme mean") {
  std::mt19937_64 rng(17);
  const auto policy = ScoringPolicy::fractional();
  for (int round = 0; round < 1000; ++round) {
    const Dataset d = testutil::random_dataset(rng);
    CHECK(r_indicator(d, kSixPr, policy) == Rational(191, 100));
  }
}

TEST_CASE("subset additivity holds exactly for every policy") {
  std::mt19937_64 rng(23);
  std::vector<ScoringPolicy> policies;
  for (auto rule : {CountingRule::StrictLess, CountingRule::InclusiveRank,
                    CountingRule::PlusPointNine}) {
    for (auto ties : {TiePolicy::LowestRank, TiePolicy::HighestRank,
                      TiePolicy::AverageRank, TiePolicy::AverageWeight}) {
      policies.push_back(ScoringPolicy::discrete(rule, ties));
    }
  }
  policies.push_back(ScoringPolicy::fractional());

  for (int round = 0; round < 100; ++round) {
    const Dataset d = testutil::random_dataset(rng, 80);
    for (const ScoringPolicy& policy : policies) {
      const IndicatorReport report = per_owner_report(d, kSixPr, policy);
      Rational owner_sum(0);
      for (const auto& [owner, stats] : report.per_owner) {
        owner_sum += stats.i3;
        CHECK(stats.r == stats.i3 / stats.paper_count);
      }
      CHECK(owner_sum == report.total_i3);
      CHECK(report.total_r == report.total_i3 / report.paper_count);
      // weights bounded by the scheme extremes
      for (const WeightedPaper& wp : weigh(d, kSixPr, policy)) {
        CHECK(wp.weight >= 1);
        CHECK(wp.weight <= 6);
      }
      // ranks of m owners sum to m(m+1)/2
      Rational rank_sum(0);
      for (const auto& [owner, stats] : report.per_owner) {
        rank_sum += stats.rank;
      }
      const auto m = static_cast<std::int64_t>(report.per_owner.size());
      CHECK(rank_sum == Rational(m * (m + 1), 2));
    }
  }
}

TEST_CASE("tie symmetry: id order never changes a weight") {
  std::mt19937_64 rng(29);
  const std::vector<ScoringPolicy> policies = {
      lowest(),
      ScoringPolicy::discrete(CountingRule::StrictLess,
                              TiePolicy::AverageWeight),
      ScoringPolicy::discrete(CountingRule::InclusiveRank,
                              TiePolicy::AverageRank),
      ScoringPolicy::fractional(),
  };
  for (int round = 0; round < 50; ++round) {
    const Dataset d = testutil::random_dataset(rng, 60);
    for (const ScoringPolicy& policy : policies) {
      std::map<std::int64_t, Rational> baseline;
      for (const WeightedPaper& wp : weigh(d, kSixPr, policy)) {
        baseline[wp.paper.id] = wp.weight;
      }
      Dataset shuffled = d;
      std::shuffle(shuffled.papers.begin(), shuffled.papers.end(), rng);
      for (const WeightedPaper& wp : weigh(shuffled, kSixPr, policy)) {
        CHECK(baseline.at(wp.paper.id) == wp.weight);
      }
    }
  }
}

TEST_CASE("adding an uncited paper never lowers i3 under strict-less") {
  std::mt19937_64 rng(31);
  const std::vector<ScoringPolicy> policies = {
      lowest(),
      ScoringPolicy::discrete(CountingRule::StrictLess,
                              TiePolicy::AverageWeight),
  };
  for (int round = 0; round < 1000; ++round) {
    const Dataset d = testutil::random_dataset(rng, 60);
    Dataset grown = d;
    grown.papers.push_back(
        Paper{static_cast<std::int64_t>(d.papers.size()) + 1, "X", 0});
    for (const ScoringPolicy& policy : policies) {
      const Rational before = i3(d, kSixPr, policy);
      const Rational after = i3(grown, kSixPr, policy);
      CHECK(after >= before + 1);
    }
  }
}

TEST_CASE("a citation addition can decrease i3 under lowest-rank") {
  // regression for the A1 -> A2 drop; the suite asserts the drop exists
  CHECK(i3(a1(), kSixPr, lowest()) == 76);
  CHECK(i3(a2(), kSixPr, lowest()) == 66);
}

TEST_CASE("per-owner report for B1 and B2") {
  const IndicatorReport rep1 = per_owner_report(b1(), kSixPr, lowest());
  CHECK(rep1.total_i3 == 19);
  CHECK(rep1.total_r == Rational(19, 15));
  CHECK(rep1.per_owner.at("H").i3 == 8);
  CHECK(rep1.per_owner.at("M").i3 == 4);
  CHECK(rep1.per_owner.at("L").i3 == 7);
  // M and L tie at r = 1 and share ranks 2 and 3
  CHECK(rep1.per_owner.at("M").rank == Rational(5, 2));
  CHECK(rep1.per_owner.at("L").rank == Rational(5, 2));
  CHECK(rep1.per_owner.at("H").rank == 1);

  Dataset b2 = b1();
  b2.label = "B2";
  b2.papers.push_back(Paper{16, "N", 0});
  const IndicatorReport rep2 = per_owner_report(b2, kSixPr, lowest());
  CHECK(rep2.total_i3 == 28);
  CHECK(rep2.total_r == Rational(7, 4));
  const auto weighted = weigh(b2, kSixPr, lowest());
  CHECK(entry_of(weighted, 3).weight == 3);
  CHECK(entry_of(weighted, 2).weight == 2);
  CHECK(entry_of(weighted, 1).weight == 1);
  CHECK(entry_of(weighted, 0).weight == 1);
}

TEST_CASE("B1 under average-weight: M's papers average 1.75") {
  const auto policy = ScoringPolicy::discrete(CountingRule::StrictLess,
                                              TiePolicy::AverageWeight);
  const IndicatorReport report = per_owner_report(b1(), kSixPr, policy);
  CHECK(report.per_owner.at("M").r == Rational(7, 4));
  CHECK(report.per_owner.at("M").i3 == 7);
  CHECK(report.per_owner.at("L").i3 == 7);
  // ranking by per-owner r: H (3) > M (1.75) > L (1); the i3 contributions
  // of M and L tie at 7
  CHECK(report.per_owner.at("H").rank == 1);
  CHECK(report.per_owner.at("M").rank == 2);
  CHECK(report.per_owner.at("L").rank == 3);
}

TEST_CASE("weigh rejects an empty dataset") {
  CHECK_THROWS_AS(weigh(Dataset{}, kSixPr, lowest()), std::invalid_argument);
}
