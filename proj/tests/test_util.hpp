#pragma once

#include "prc/types.hpp"

#include <random>
#include <string>

namespace prc::testutil {

// Random dataset with plenty of ties: citation counts are the min of two
// uniform draws, so low counts dominate.
inline Dataset random_dataset(std::mt19937_64& rng, int max_papers = 200,
                              int max_citations = 8, int max_owners = 5) {
  std::uniform_int_distribution<int> n_dist(1, max_papers);
  std::uniform_int_distribution<int> owner_count_dist(1, max_owners);
  std::uniform_int_distribution<std::int64_t> c_dist(0, max_citations);

  Dataset dataset;
  dataset.label = "random";
  const int n = n_dist(rng);
  const int owners = owner_count_dist(rng);
  std::uniform_int_distribution<int> owner_dist(1, owners);
  for (int i = 0; i < n; ++i) {
    const std::int64_t citations = std::min(c_dist(rng), c_dist(rng));
    dataset.papers.push_back(
        Paper{i + 1, "O" + std::to_string(owner_dist(rng)), citations});
  }
  return dataset;
}

// Dataset from a histogram spec {citations, count}, single owner.
inline Dataset from_bins(
    std::initializer_list<std::pair<std::int64_t, int>> bins,
    const std::string& label = "d", const std::string& owner = kUnattributed) {
  Dataset dataset;
  dataset.label = label;
  std::int64_t id = 1;
  for (const auto& [citations, count] : bins) {
    for (int i = 0; i < count; ++i) {
      dataset.papers.push_back(Paper{id++, owner, citations});
    }
  }
  return dataset;
}

}  // namespace prc::testutil
