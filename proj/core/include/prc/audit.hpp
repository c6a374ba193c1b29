#pragma once

#include "prc/evolution.hpp"
#include "prc/scoring.hpp"

#include <map>
#include <string>
#include <vector>

namespace prc {

// Cumulative change of one owner's record between two snapshots.
struct OwnerDelta {
  std::int64_t papers_added = 0;
  // from_count -> number of citation additions starting at that count.
  std::map<std::int64_t, std::int64_t> citations_added;

  bool empty() const { return papers_added == 0 && citations_added.empty(); }
  bool operator==(const OwnerDelta&) const = default;
};

enum class ViolationKind {
  SameImprovement,
  StrictIndependence,
};

// A strict change of the relative order of two owners (tie -> order,
// order -> tie, or reversal).
struct Violation {
  ViolationKind kind = ViolationKind::StrictIndependence;
  std::string from_case;
  std::string to_case;
  std::string owner_x;  // lexicographically smaller of the pair
  std::string owner_y;
  Rational r_x_before, r_y_before;
  Rational r_x_after, r_y_after;
  Rational rank_x_before, rank_y_before;
  Rational rank_x_after, rank_y_after;
};

struct AuditResult {
  std::vector<Violation> violations;
  // Set when the audit could not apply (e.g. fewer than 3 owners for the
  // strict-independence check).
  bool warning = false;
  std::string warning_message;
};

// For each consecutive snapshot pair whose delta touches owner Z, checks
// every owner pair (X, Y) with X, Y != Z: sign(R_X - R_Y) must be preserved.
// Violations are ordered by from_case, then pair.
AuditResult strict_independence_violations(const Scenario& scenario,
                                           const ClassScheme& scheme,
                                           const ScoringPolicy& policy);

// Over all snapshot pairs (i < j): whenever the cumulative owner deltas show
// exactly two owners with equal nonzero deltas and every other owner
// unchanged, sign(R_X - R_Y) must be preserved between the two snapshots.
// O(cases^2) pairs; fine at desk scale.
AuditResult same_improvement_violations(const Scenario& scenario,
                                        const ClassScheme& scheme,
                                        const ScoringPolicy& policy);

}  // namespace prc
