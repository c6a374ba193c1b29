#include "prc/audit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace prc {

namespace {

int sign(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

void accumulate(std::map<std::string, OwnerDelta>& deltas, const Delta& d) {
  OwnerDelta& owner_delta = deltas[d.owner];
  if (d.kind == Delta::Kind::AddPaper) {
    ++owner_delta.papers_added;
  } else {
    ++owner_delta.citations_added[d.from_count];
  }
}

// Builds a violation record if the relative order of X and Y strictly
// changed between the two reports (tie -> order, order -> tie, reversal).
bool check_pair(ViolationKind kind, const IndicatorReport& before,
                const IndicatorReport& after, const std::string& x,
                const std::string& y, std::vector<Violation>& out) {
  const OwnerStats& xb = before.per_owner.at(x);
  const OwnerStats& yb = before.per_owner.at(y);
  const OwnerStats& xa = after.per_owner.at(x);
  const OwnerStats& ya = after.per_owner.at(y);
  if (sign(xb.r - yb.r) == sign(xa.r - ya.r)) return false;
  Violation v;
  v.kind = kind;
  v.from_case = before.label;
  v.to_case = after.label;
  v.owner_x = x;
  v.owner_y = y;
  v.r_x_before = xb.r;
  v.r_y_before = yb.r;
  v.r_x_after = xa.r;
  v.r_y_after = ya.r;
  v.rank_x_before = xb.rank;
  v.rank_y_before = yb.rank;
  v.rank_x_after = xa.rank;
  v.rank_y_after = ya.rank;
  out.push_back(std::move(v));
  return true;
}

std::vector<IndicatorReport> snapshot_reports(const Scenario& scenario,
                                              const ClassScheme& scheme,
                                              const ScoringPolicy& policy) {
  std::vector<IndicatorReport> reports;
  for (const Dataset& snapshot : replay(scenario)) {
    reports.push_back(per_owner_report(snapshot, scheme, policy));
  }
  return reports;
}

}  // namespace

AuditResult strict_independence_violations(const Scenario& scenario,
                                           const ClassScheme& scheme,
                                           const ScoringPolicy& policy) {
  AuditResult result;
  const std::vector<IndicatorReport> reports =
      snapshot_reports(scenario, scheme, policy);

  std::set<std::string> all_owners;
  for (const IndicatorReport& report : reports) {
    for (const auto& [owner, stats] : report.per_owner) all_owners.insert(owner);
  }
  if (all_owners.size() < 3) {
    result.warning = true;
    result.warning_message =
        "strict independence needs at least 3 owners; nothing to check";
    return result;
  }

  for (std::size_t step = 0; step < scenario.steps.size(); ++step) {
    const IndicatorReport& before = reports[step];
    const IndicatorReport& after = reports[step + 1];
    const std::string& changed = scenario.steps[step].delta.owner;

    std::vector<std::string> bystanders;
    for (const auto& [owner, stats] : before.per_owner) {
      if (owner != changed && after.per_owner.contains(owner)) {
        bystanders.push_back(owner);
      }
    }
    for (std::size_t i = 0; i < bystanders.size(); ++i) {
      for (std::size_t j = i + 1; j < bystanders.size(); ++j) {
        check_pair(ViolationKind::StrictIndependence, before, after,
                   bystanders[i], bystanders[j], result.violations);
      }
    }
  }
  return result;
}

AuditResult same_improvement_violations(const Scenario& scenario,
                                        const ClassScheme& scheme,
                                        const ScoringPolicy& policy) {
  AuditResult result;
  const std::vector<IndicatorReport> reports =
      snapshot_reports(scenario, scheme, policy);

  const std::size_t cases = reports.size();
  for (std::size_t i = 0; i + 1 < cases; ++i) {
    std::map<std::string, OwnerDelta> cumulative;
    for (std::size_t j = i + 1; j < cases; ++j) {
      accumulate(cumulative, scenario.steps[j - 1].delta);
      if (cumulative.size() != 2) continue;
      auto first = cumulative.begin();
      auto second = std::next(first);
      if (first->second != second->second) continue;
      const std::string& x = first->first;
      const std::string& y = second->first;
      if (!reports[i].per_owner.contains(x) ||
          !reports[i].per_owner.contains(y)) {
        continue;  // no relative order exists before the window
      }
      check_pair(ViolationKind::SameImprovement, reports[i], reports[j], x, y,
                 result.violations);
    }
  }
  return result;
}

}  // namespace prc
