#include "prc/types.hpp"

#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace prc {

std::int64_t Dataset::paper_count() const {
  return static_cast<std::int64_t>(papers.size());
}

std::int64_t Dataset::citation_count() const {
  std::int64_t total = 0;
  for (const Paper& p : papers) total += p.citations;
  return total;
}

void Dataset::validate() const {
  std::unordered_set<std::int64_t> seen;
  for (const Paper& p : papers) {
    if (p.citations < 0) {
      throw std::invalid_argument("paper " + std::to_string(p.id) +
                                  ": negative citation count");
    }
    if (!seen.insert(p.id).second) {
      throw std::invalid_argument("duplicate paper id " + std::to_string(p.id));
    }
  }
}

CitationHistogram::CitationHistogram(const Dataset& dataset) {
  if (dataset.papers.empty()) {
    throw std::invalid_argument("empty reference set");
  }
  for (const Paper& p : dataset.papers) {
    ++bins_[p.citations];
    ++total_papers_;
    total_citations_ += p.citations;
  }
  std::int64_t running = 0;
  for (const auto& [citations, count] : bins_) {
    below_[citations] = running;
    running += count;
  }
}

std::int64_t CitationHistogram::fewer_than(std::int64_t citations) const {
  auto it = below_.find(citations);
  if (it == below_.end()) {
    throw std::invalid_argument("unknown citation bin " +
                                std::to_string(citations));
  }
  return it->second;
}

ClassScheme ClassScheme::six_pr() {
  ClassScheme scheme;
  scheme.boundaries = {Rational(50), Rational(75), Rational(90),
                       Rational(95), Rational(99), Rational(100)};
  scheme.weights = {Rational(1), Rational(2), Rational(3),
                    Rational(4), Rational(5), Rational(6)};
  return scheme;
}

Rational ClassScheme::lower_edge(std::size_t k) const {
  return k == 0 ? Rational(0) : boundaries[k - 1];
}

Rational ClassScheme::width(std::size_t k) const {
  return boundaries[k] - lower_edge(k);
}

Rational ClassScheme::min_weight() const {
  Rational m = weights.front();
  for (const Rational& w : weights) m = std::min(m, w);
  return m;
}

Rational ClassScheme::max_weight() const {
  Rational m = weights.front();
  for (const Rational& w : weights) m = std::max(m, w);
  return m;
}

Rational ClassScheme::theoretical_mean() const {
  Rational sum(0);
  for (std::size_t k = 0; k < class_count(); ++k) {
    sum += width(k) * weights[k];
  }
  return sum / 100;
}

std::size_t ClassScheme::class_below(const Rational& percentage) const {
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    if (percentage < boundaries[k]) return k;
  }
  throw std::logic_error("percentage not below the last boundary");
}

std::size_t ClassScheme::class_at_or_below(const Rational& percentage) const {
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    if (percentage <= boundaries[k]) return k;
  }
  throw std::logic_error("percentage above the last boundary");
}

void ClassScheme::validate() const {
  if (boundaries.empty()) {
    throw std::invalid_argument("class scheme needs at least one class");
  }
  if (weights.size() != boundaries.size()) {
    throw std::invalid_argument("one weight per class boundary required");
  }
  Rational previous(0);
  for (std::size_t k = 0; k < boundaries.size(); ++k) {
    if (k > 0 && boundaries[k] <= previous) {
      throw std::invalid_argument("boundaries must be strictly increasing");
    }
    if (k == 0 && boundaries[k] <= 0) {
      throw std::invalid_argument("boundaries must be positive");
    }
    previous = boundaries[k];
  }
  if (boundaries.back() != 100) {
    throw std::invalid_argument("last boundary must be 100");
  }
  for (const Rational& w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be positive");
  }
}

}  // namespace prc
