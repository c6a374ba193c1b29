#include "prc/oracle.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace prc {

namespace {

std::int64_t floor_percentage(std::int64_t count_times_ten,
                              std::int64_t n_tot) {
  // floor(count_times_ten * 10 / n_tot), everything non-negative
  return (count_times_ten * 10) / n_tot;
}

// Number of papers strictly below / exactly at this citation count, by
// scanning the whole dataset.
std::int64_t count_fewer(const Dataset& dataset, std::int64_t citations) {
  std::int64_t n = 0;
  for (const Paper& p : dataset.papers) {
    if (p.citations < citations) ++n;
  }
  return n;
}

std::int64_t count_equal(const Dataset& dataset, std::int64_t citations) {
  std::int64_t n = 0;
  for (const Paper& p : dataset.papers) {
    if (p.citations == citations) ++n;
  }
  return n;
}

// Class of a single provisional position, re-derived from first principles:
// count is the number of papers taken as below the position.
std::size_t position_class(const ClassScheme& scheme, CountingRule rule,
                           std::int64_t count, std::int64_t n_tot) {
  Rational percentage;
  bool inclusive = false;
  switch (rule) {
    case CountingRule::StrictLess:
      percentage = Rational(count * 100, n_tot);
      break;
    case CountingRule::InclusiveRank:
      percentage = Rational((count + 1) * 100, n_tot);
      inclusive = true;
      break;
    case CountingRule::PlusPointNine:
      percentage = Rational((count * 10 + 9) * 10, n_tot);
      break;
  }
  for (std::size_t k = 0; k < scheme.class_count(); ++k) {
    if (inclusive ? percentage <= scheme.boundaries[k]
                  : percentage < scheme.boundaries[k]) {
      return k;
    }
  }
  throw std::logic_error("position beyond the last class boundary");
}

// Exact fractional weight of one rank interval via boundary clamping.
Rational fractional_rank_weight(std::int64_t rank, std::int64_t n_tot,
                                const ClassScheme& scheme) {
  const Rational lo((rank - 1) * 100, n_tot);
  const Rational hi(rank * 100, n_tot);
  Rational total(0);
  Rational previous_edge(0);
  for (std::size_t k = 0; k < scheme.class_count(); ++k) {
    const Rational a = lo > previous_edge ? lo : previous_edge;
    const Rational b = hi < scheme.boundaries[k] ? hi : scheme.boundaries[k];
    if (b > a) total += scheme.weights[k] * (b - a);
    previous_edge = scheme.boundaries[k];
  }
  return total / (hi - lo);
}

Rational paper_weight_bruteforce(const Dataset& dataset,
                                 const ClassScheme& scheme,
                                 const ScoringPolicy& policy,
                                 std::int64_t citations) {
  const std::int64_t n_tot = static_cast<std::int64_t>(dataset.papers.size());
  const std::int64_t below = count_fewer(dataset, citations);
  const std::int64_t ties = count_equal(dataset, citations);

  if (policy.kind == ScoringPolicy::Kind::Fractional) {
    Rational sum(0);
    for (std::int64_t j = 1; j <= ties; ++j) {
      sum += fractional_rank_weight(below + j, n_tot, scheme);
    }
    return sum / ties;
  }

  switch (policy.ties) {
    case TiePolicy::LowestRank:
      return scheme
          .weights[position_class(scheme, policy.rule, below, n_tot)];
    case TiePolicy::HighestRank:
      return scheme.weights[position_class(scheme, policy.rule,
                                           below + ties - 1, n_tot)];
    case TiePolicy::AverageRank: {
      std::int64_t floors = 0;
      for (std::int64_t j = 0; j < ties; ++j) {
        switch (policy.rule) {
          case CountingRule::StrictLess:
            floors += floor_percentage((below + j) * 10, n_tot);
            break;
          case CountingRule::InclusiveRank:
            floors += floor_percentage((below + j + 1) * 10, n_tot);
            break;
          case CountingRule::PlusPointNine:
            floors += floor_percentage((below + j) * 10 + 9, n_tot);
            break;
        }
      }
      const Rational average(floors, ties);
      const bool inclusive = policy.rule == CountingRule::InclusiveRank;
      for (std::size_t k = 0; k < scheme.class_count(); ++k) {
        if (inclusive ? average <= scheme.boundaries[k]
                      : average < scheme.boundaries[k]) {
          return scheme.weights[k];
        }
      }
      throw std::logic_error("averaged percentile beyond the last boundary");
    }
    case TiePolicy::AverageWeight: {
      Rational sum(0);
      for (std::int64_t j = 0; j < ties; ++j) {
        sum += scheme
                   .weights[position_class(scheme, policy.rule, below + j,
                                           n_tot)];
      }
      return sum / ties;
    }
  }
  throw std::logic_error("unknown tie policy");
}

}  // namespace

Rational fractional_weight_bruteforce(std::int64_t rank, std::int64_t n_tot,
                                      const ClassScheme& scheme,
                                      const OracleConfig& config) {
  if (rank < 1 || rank > n_tot) {
    throw std::invalid_argument("rank out of range");
  }
  if (config.slices_per_paper < 1) {
    throw std::invalid_argument("slices_per_paper must be positive");
  }
  const std::int64_t slices = config.slices_per_paper;
  Rational sum(0);
  for (std::int64_t s = 0; s < slices; ++s) {
    // midpoint of slice s inside ((rank-1)*100/n_tot, rank*100/n_tot]
    const Rational mid((rank - 1) * 100 * 2 * slices + 100 * (2 * s + 1),
                       2 * slices * n_tot);
    sum += scheme.weights[scheme.class_at_or_below(mid)];
  }
  return sum / slices;
}

bool tie_order_oracle(const Dataset& dataset, const ClassScheme& scheme,
                      const ScoringPolicy& policy,
                      const OracleConfig& config) {
  std::map<std::int64_t, Rational> baseline;
  for (const WeightedPaper& wp : weigh(dataset, scheme, policy)) {
    baseline[wp.paper.id] = wp.weight;
  }

  std::mt19937_64 rng(config.seed);
  for (int round = 0; round < config.permutations; ++round) {
    Dataset shuffled = dataset;
    std::shuffle(shuffled.papers.begin(), shuffled.papers.end(), rng);
    // swap ids within tied groups
    std::map<std::int64_t, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < shuffled.papers.size(); ++i) {
      groups[shuffled.papers[i].citations].push_back(i);
    }
    for (auto& [citations, members] : groups) {
      std::vector<std::int64_t> ids;
      for (std::size_t i : members) ids.push_back(shuffled.papers[i].id);
      std::shuffle(ids.begin(), ids.end(), rng);
      for (std::size_t k = 0; k < members.size(); ++k) {
        shuffled.papers[members[k]].id = ids[k];
      }
    }
    for (const WeightedPaper& wp : weigh(shuffled, scheme, policy)) {
      if (baseline.at(wp.paper.id) != wp.weight) return false;
    }
  }
  return true;
}

IndicatorReport report_oracle(const Dataset& dataset,
                              const ClassScheme& scheme,
                              const ScoringPolicy& policy) {
  if (dataset.papers.empty()) {
    throw std::invalid_argument("empty reference set");
  }
  IndicatorReport report;
  report.label = dataset.label;
  report.paper_count = static_cast<std::int64_t>(dataset.papers.size());

  for (const Paper& paper : dataset.papers) {
    const Rational weight =
        paper_weight_bruteforce(dataset, scheme, policy, paper.citations);
    OwnerStats& stats = report.per_owner[paper.owner];
    ++stats.paper_count;
    stats.citation_count += paper.citations;
    stats.i3 += weight;
    report.total_i3 += weight;
    report.citation_count += paper.citations;
  }
  report.total_r = report.total_i3 / report.paper_count;
  for (auto& [owner, stats] : report.per_owner) {
    stats.r = stats.i3 / stats.paper_count;
  }

  // rank = (#strictly better) + (1 + #tied including self) / 2 ... spelled
  // as the average of the spanned positions, computed by counting.
  for (auto& [owner, stats] : report.per_owner) {
    std::int64_t better = 0;
    std::int64_t tied = 0;
    for (const auto& [other, other_stats] : report.per_owner) {
      if (other_stats.r > stats.r) ++better;
      if (other_stats.r == stats.r) ++tied;  // counts self
    }
    stats.rank = Rational(2 * better + tied + 1, 2);
  }
  return report;
}

}  // namespace prc
