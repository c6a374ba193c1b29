#pragma once

#include "prc/scoring.hpp"

#include <cstdint>

namespace prc {

// Brute-force reference implementations. Deliberately slow and structured
// differently from the production paths; used to validate them and to mint
// test fixture values.

struct OracleConfig {
  // Discretization density for fractional checks; >= 100 for fixture
  // minting.
  int slices_per_paper = 10000;
  // Number of sampled permutations for tie-order tests.
  int permutations = 100;
  std::uint64_t seed = 0;
};

// Subdivides the rank-r interval ((r-1)*100/n_tot, r*100/n_tot] into slices,
// classifies each slice midpoint, and averages the class weights. Agrees
// with the exact fractional weight within
// (max weight - min weight) / slices_per_paper.
Rational fractional_weight_bruteforce(std::int64_t rank, std::int64_t n_tot,
                                      const ClassScheme& scheme,
                                      const OracleConfig& config);

// True iff shuffling paper order and swapping ids within tied groups leaves
// every paper's weight unchanged for all sampled permutations.
bool tie_order_oracle(const Dataset& dataset, const ClassScheme& scheme,
                      const ScoringPolicy& policy, const OracleConfig& config);

// Straight-line O(n^2) re-implementation of per_owner_report; counts
// fewer-than and tie groups by scanning all papers, computes ranks by
// counting. Must equal the production report exactly.
IndicatorReport report_oracle(const Dataset& dataset,
                              const ClassScheme& scheme,
                              const ScoringPolicy& policy);

}  // namespace prc
