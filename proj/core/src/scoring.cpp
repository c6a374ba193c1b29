#include "prc/scoring.hpp"

#include <algorithm>
#include <stdexcept>

namespace prc {

namespace {

struct TieGroup {
  std::int64_t citations = 0;
  std::vector<std::size_t> members;  // indices into dataset.papers
  std::int64_t below = 0;            // papers with strictly fewer citations
};

std::vector<TieGroup> tie_groups(const Dataset& dataset) {
  std::map<std::int64_t, TieGroup> by_count;
  for (std::size_t i = 0; i < dataset.papers.size(); ++i) {
    TieGroup& g = by_count[dataset.papers[i].citations];
    g.citations = dataset.papers[i].citations;
    g.members.push_back(i);
  }
  std::vector<TieGroup> groups;
  groups.reserve(by_count.size());
  std::int64_t running = 0;
  for (auto& [citations, group] : by_count) {
    group.below = running;
    running += static_cast<std::int64_t>(group.members.size());
    groups.push_back(std::move(group));
  }
  return groups;
}

// Percentage of one provisional position under a counting rule. `count` is
// the number of papers taken as below the position (for InclusiveRank the
// rank is count + 1, the paper itself included).
Rational rule_percentage(CountingRule rule, std::int64_t count,
                         std::int64_t n_tot) {
  switch (rule) {
    case CountingRule::StrictLess:
      return Rational(count * 100, n_tot);
    case CountingRule::InclusiveRank:
      return Rational((count + 1) * 100, n_tot);
    case CountingRule::PlusPointNine:
      // (count + 9/10) * 100 / n_tot
      return Rational(count * 10 + 9, 1) * Rational(10, n_tot);
  }
  throw std::logic_error("unknown counting rule");
}

std::size_t rule_class(const ClassScheme& scheme, CountingRule rule,
                       const Rational& percentage) {
  return rule == CountingRule::InclusiveRank
             ? scheme.class_at_or_below(percentage)
             : scheme.class_below(percentage);
}

struct GroupWeight {
  Rational percentage;
  std::optional<std::size_t> class_index;
  Rational weight;
};

GroupWeight weigh_discrete_group(const TieGroup& group, std::int64_t n_tot,
                                 const ClassScheme& scheme,
                                 const ScoringPolicy& policy) {
  const auto n_tie = static_cast<std::int64_t>(group.members.size());
  Rational percentage;
  std::optional<std::size_t> class_index;
  Rational weight;

  switch (policy.ties) {
    case TiePolicy::LowestRank:
    case TiePolicy::HighestRank: {
      const std::int64_t count = policy.ties == TiePolicy::LowestRank
                                     ? group.below
                                     : group.below + n_tie - 1;
      percentage = rule_percentage(policy.rule, count, n_tot);
      const std::size_t k = rule_class(scheme, policy.rule, percentage);
      class_index = k;
      weight = scheme.weights[k];
      break;
    }
    case TiePolicy::AverageRank: {
      std::int64_t floor_sum = 0;
      for (std::int64_t j = 0; j < n_tie; ++j) {
        floor_sum +=
            floor_to_int(rule_percentage(policy.rule, group.below + j, n_tot));
      }
      percentage = Rational(floor_sum, n_tie);
      const std::size_t k = rule_class(scheme, policy.rule, percentage);
      class_index = k;
      weight = scheme.weights[k];
      break;
    }
    case TiePolicy::AverageWeight: {
      Rational weight_sum(0);
      std::optional<std::size_t> common_class;
      bool uniform = true;
      for (std::int64_t j = 0; j < n_tie; ++j) {
        const Rational p =
            rule_percentage(policy.rule, group.below + j, n_tot);
        const std::size_t k = rule_class(scheme, policy.rule, p);
        weight_sum += scheme.weights[k];
        if (!common_class) {
          common_class = k;
        } else if (*common_class != k) {
          uniform = false;
        }
      }
      percentage = rule_percentage(policy.rule, group.below, n_tot);
      if (uniform) class_index = common_class;
      weight = weight_sum / n_tie;
      break;
    }
  }

  return GroupWeight{percentage, class_index, weight};
}

// Sum over classes of weight * overlap with the half-open interval
// (lo, hi].
Rational class_overlap_sum(const ClassScheme& scheme, const Rational& lo,
                           const Rational& hi) {
  Rational sum(0);
  for (std::size_t k = 0; k < scheme.class_count(); ++k) {
    const Rational a = std::max(lo, scheme.lower_edge(k));
    const Rational b = std::min(hi, scheme.boundaries[k]);
    if (b > a) sum += scheme.weights[k] * (b - a);
  }
  return sum;
}

}  // namespace

std::vector<WeightedPaper> weigh(const Dataset& dataset,
                                 const ClassScheme& scheme,
                                 const ScoringPolicy& policy) {
  if (dataset.papers.empty()) {
    throw std::invalid_argument("empty reference set");
  }
  scheme.validate();
  dataset.validate();

  const std::int64_t n_tot = dataset.paper_count();
  const std::vector<TieGroup> groups = tie_groups(dataset);

  std::vector<WeightedPaper> by_index(dataset.papers.size());

  for (const TieGroup& group : groups) {
    const auto n_tie = static_cast<std::int64_t>(group.members.size());
    Rational percentage;
    std::optional<std::size_t> class_index;
    Rational weight;

    if (policy.kind == ScoringPolicy::Kind::Fractional) {
      // The tied group's ranks tile a contiguous interval, so the averaged
      // per-paper weight equals the width-weighted mean over the union.
      const Rational lo(group.below * 100, n_tot);
      const Rational hi((group.below + n_tie) * 100, n_tot);
      percentage = hi;
      weight = class_overlap_sum(scheme, lo, hi) / (hi - lo);
    } else {
      const GroupWeight gw = weigh_discrete_group(group, n_tot, scheme, policy);
      percentage = gw.percentage;
      class_index = gw.class_index;
      weight = gw.weight;
    }

    for (std::size_t member : group.members) {
      by_index[member] =
          WeightedPaper{dataset.papers[member], percentage, class_index,
                        weight};
    }
  }
  return by_index;
}

Rational i3(const Dataset& dataset, const ClassScheme& scheme,
            const ScoringPolicy& policy) {
  Rational total(0);
  for (const WeightedPaper& wp : weigh(dataset, scheme, policy)) {
    total += wp.weight;
  }
  return total;
}

Rational r_indicator(const Dataset& dataset, const ClassScheme& scheme,
                     const ScoringPolicy& policy) {
  return i3(dataset, scheme, policy) / dataset.paper_count();
}

IndicatorReport per_owner_report(const Dataset& dataset,
                                 const ClassScheme& scheme,
                                 const ScoringPolicy& policy) {
  IndicatorReport report;
  report.label = dataset.label;
  report.paper_count = dataset.paper_count();
  report.citation_count = dataset.citation_count();

  for (const WeightedPaper& wp : weigh(dataset, scheme, policy)) {
    OwnerStats& stats = report.per_owner[wp.paper.owner];
    ++stats.paper_count;
    stats.citation_count += wp.paper.citations;
    stats.i3 += wp.weight;
    report.total_i3 += wp.weight;
  }
  report.total_r = report.total_i3 / report.paper_count;

  for (auto& [owner, stats] : report.per_owner) {
    stats.r = stats.i3 / stats.paper_count;
  }

  // Rank by descending r; tied owners share the average of the spanned
  // positions.
  std::vector<std::pair<std::string, Rational>> order;
  order.reserve(report.per_owner.size());
  for (const auto& [owner, stats] : report.per_owner) {
    order.emplace_back(owner, stats.r);
  }
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  std::size_t position = 0;
  while (position < order.size()) {
    std::size_t end = position + 1;
    while (end < order.size() && order[end].second == order[position].second) {
      ++end;
    }
    // positions are 1-based: average of position+1 .. end
    const Rational rank =
        Rational(static_cast<std::int64_t>(position + 1 + end), 2);
    for (std::size_t i = position; i < end; ++i) {
      report.per_owner[order[i].first].rank = rank;
    }
    position = end;
  }
  return report;
}

}  // namespace prc
