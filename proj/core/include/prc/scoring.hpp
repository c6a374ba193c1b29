#pragma once

#include "prc/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace prc {

// How a paper's percentage position in the reference set is counted.
enum class CountingRule {
  // percentage = n_< * 100 / n_tot, class decided by strict "<" against the
  // boundaries; tied papers are not counted as fewer-than.
  StrictLess,
  // papers ranked by increasing citations, the paper itself included:
  // percentage = r * 100 / n_tot, class decided by "<=". The unique most
  // cited paper always lands in the top class.
  InclusiveRank,
  // like StrictLess but with count n_< + 9/10. Reproduces the rounding
  // pathology around the top class for n_tot slightly above 100; it is not a
  // recommended rule.
  PlusPointNine,
};

// How papers with exactly equal citation counts share a position.
enum class TiePolicy {
  // the whole group takes the percentage derived from n_<.
  LowestRank,
  // the whole group takes the highest possible position, count
  // n_< + n_tie - 1 under the active counting rule.
  HighestRank,
  // each tied paper's percentage is floored to an integer percentile, the
  // integers are averaged, and the average (not re-floored) is classed.
  AverageRank,
  // tied papers get provisional distinct positions n_< .. n_< + n_tie - 1,
  // each is classed and weighted, and the weights are averaged.
  AverageWeight,
};

struct ScoringPolicy {
  enum class Kind { Discrete, Fractional };

  Kind kind = Kind::Discrete;
  CountingRule rule = CountingRule::StrictLess;
  TiePolicy ties = TiePolicy::LowestRank;

  static ScoringPolicy discrete(CountingRule rule, TiePolicy ties) {
    return ScoringPolicy{Kind::Discrete, rule, ties};
  }

  // Rank-r papers occupy the percentage interval
  // ((r-1)*100/n_tot, r*100/n_tot]; the weight is the width-weighted average
  // of the class weights over that interval, and tied papers share the mean
  // of their interval weights. Counting rule and tie policy are ignored.
  static ScoringPolicy fractional() {
    return ScoringPolicy{Kind::Fractional, CountingRule::StrictLess,
                         TiePolicy::AverageWeight};
  }
};

struct WeightedPaper {
  Paper paper;
  Rational percentage;
  // Absent for fractional scoring and for averaged groups spanning several
  // classes.
  std::optional<std::size_t> class_index;
  Rational weight;
};

// One WeightedPaper per input paper; weights depend only on the citation
// multiset, never on id order.
std::vector<WeightedPaper> weigh(const Dataset& dataset,
                                 const ClassScheme& scheme,
                                 const ScoringPolicy& policy);

// Sum of all paper weights.
Rational i3(const Dataset& dataset, const ClassScheme& scheme,
            const ScoringPolicy& policy);

// i3 / n_tot.
Rational r_indicator(const Dataset& dataset, const ClassScheme& scheme,
                     const ScoringPolicy& policy);

struct OwnerStats {
  std::int64_t paper_count = 0;
  std::int64_t citation_count = 0;
  Rational i3;
  Rational r;
  // Position in the descending-r ranking; tied owners share the average of
  // the spanned positions.
  Rational rank;
};

struct IndicatorReport {
  std::string label;
  std::map<std::string, OwnerStats> per_owner;
  std::int64_t paper_count = 0;
  std::int64_t citation_count = 0;
  Rational total_i3;
  Rational total_r;
};

// Per-owner contributions measured against the full dataset as reference
// set. Ranking is by descending per-owner r.
IndicatorReport per_owner_report(const Dataset& dataset,
                                 const ClassScheme& scheme,
                                 const ScoringPolicy& policy);

}  // namespace prc
