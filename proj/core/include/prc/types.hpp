#pragma once

#include "prc/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace prc {

// Owner label for papers that are not assigned to any scientist.
inline constexpr const char* kUnattributed = "_";

struct Paper {
  std::int64_t id = 0;
  std::string owner = kUnattributed;
  std::int64_t citations = 0;

  bool operator==(const Paper&) const = default;
};

// One snapshot of the reference set.
struct Dataset {
  std::string label;
  std::vector<Paper> papers;

  std::int64_t paper_count() const;
  std::int64_t citation_count() const;

  // Throws std::invalid_argument on duplicate ids or negative citations.
  void validate() const;
};

// Citation-count frequency table of a dataset: for each distinct count c the
// number n(c) of papers holding it, plus the strictly-below prefix sums.
class CitationHistogram {
 public:
  // Throws std::invalid_argument("empty reference set") for empty input.
  explicit CitationHistogram(const Dataset& dataset);

  const std::map<std::int64_t, std::int64_t>& bins() const { return bins_; }
  std::int64_t total_papers() const { return total_papers_; }
  std::int64_t total_citations() const { return total_citations_; }

  // Number of papers with strictly fewer citations than c. Tied papers are
  // not counted. Throws std::invalid_argument if c is not a bin.
  std::int64_t fewer_than(std::int64_t citations) const;

 private:
  std::map<std::int64_t, std::int64_t> bins_;
  std::map<std::int64_t, std::int64_t> below_;
  std::int64_t total_papers_ = 0;
  std::int64_t total_citations_ = 0;
};

inline CitationHistogram histogram(const Dataset& dataset) {
  return CitationHistogram(dataset);
}

// Percentile rank classes: cumulative percentage boundaries (strictly
// increasing, last one 100) and one positive weight per class.
struct ClassScheme {
  std::vector<Rational> boundaries;
  std::vector<Rational> weights;

  // The six-class scheme: bottom 50%, 50-75%, 75-90%, 90-95%, 95-99%,
  // top 1%, weighted 1..6.
  static ClassScheme six_pr();

  std::size_t class_count() const { return boundaries.size(); }
  Rational lower_edge(std::size_t k) const;
  Rational width(std::size_t k) const;
  Rational min_weight() const;
  Rational max_weight() const;

  // Width-weighted mean weight, sum(width_i * weight_i) / 100.
  Rational theoretical_mean() const;

  // First class k with percentage < boundaries[k].
  std::size_t class_below(const Rational& percentage) const;
  // First class k with percentage <= boundaries[k].
  std::size_t class_at_or_below(const Rational& percentage) const;

  void validate() const;
};

inline Rational theoretical_mean(const ClassScheme& scheme) {
  return scheme.theoretical_mean();
}

}  // namespace prc
