#pragma once

#include "prc/types.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace prc {

// One atomic change of the reference set. Deltas are strictly additive.
struct Delta {
  enum class Kind { AddPaper, AddCitation };

  Kind kind = Kind::AddPaper;
  std::string owner;
  // For AddCitation: give one more citation to the owner's paper currently
  // holding exactly this many citations. The matching paper with the lowest
  // id is targeted.
  std::int64_t from_count = 0;

  static Delta add_paper(std::string owner) {
    return Delta{Kind::AddPaper, std::move(owner), 0};
  }
  static Delta add_citation(std::string owner, std::int64_t from_count) {
    return Delta{Kind::AddCitation, std::move(owner), from_count};
  }

  bool operator==(const Delta&) const = default;
};

struct ScenarioStep {
  std::string case_label;
  Delta delta;
};

// Initial dataset plus ordered deltas; exactly one delta between consecutive
// snapshots.
struct Scenario {
  std::string name;
  Dataset initial;
  std::vector<ScenarioStep> steps;
};

// Snapshot i equals snapshot i-1 with delta i applied; index 0 is the
// initial dataset. Throws std::invalid_argument naming the step and owner if
// an AddCitation delta has no live target.
std::vector<Dataset> replay(const Scenario& scenario);

// 40-paper single-owner evolution (cases A1..A9): one designated uncited
// paper receives one citation per step, 0 -> 1 -> ... -> 8.
Scenario example_a();

struct ExampleBEndpoints {
  Dataset b1;   // H: 4 x c3, M: 4 x c2, L: 7 x c1
  Dataset b73;  // global histogram {0:29, 1:15, 2:9, 3:7}, additions owned by N
  std::map<std::string, std::string> owner_roles;
};

ExampleBEndpoints example_b_endpoints();

// Deterministic 72-step evolution from B1 to the B73 histogram. Only the
// endpoints are fixed; the interior is a documented synthetic fill: a burst
// of uncited papers for N first, then alternating paper/citation additions.
// Used by the audit fixtures.
Scenario b_like_scenario();

// Three-snapshot scenario in which H and L each add one uncited paper while
// L's large singly-cited group crosses the 50% boundary. Exhibits a
// same-improvement violation under LowestRank and none under AverageWeight.
Scenario tied_group_crossing_scenario();

struct SynthConfig {
  int owners = 4;
  int steps = 72;
  std::int64_t max_citations = 8;
  int initial_papers = 10;
};

// Reproducible pseudo-random scenario; every AddCitation step is valid at
// its position. Throws std::invalid_argument on an unsatisfiable config.
Scenario synth_scenario(std::uint64_t seed, const SynthConfig& config);

}  // namespace prc
