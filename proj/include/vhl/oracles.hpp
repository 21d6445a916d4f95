#pragma once

#include <cstdint>
#include <vector>

#include "vhl/kpartite.hpp"

namespace vhl {

/// Exhaustive-search result: total weight of the cheapest clique and the
/// chosen vertex per part. Ties resolve to the lexicographically smallest
/// witness tuple.
struct CliqueSearchResult {
  std::int64_t weight = 0;
  std::vector<int> witness;
};

inline constexpr std::int64_t kDefaultOracleBudget = std::int64_t{1} << 26;

/// Minimum-weight triangle in a 3-partite graph by direct enumeration of
/// all vertex triples.
CliqueSearchResult min_triangle_bf(const KPartiteGraph& g);

/// Minimum-weight k-clique (one vertex per part) by direct enumeration of
/// all tuples. Throws std::runtime_error when the tuple count exceeds the
/// budget.
CliqueSearchResult min_kclique_bf(const KPartiteGraph& g,
                                  std::int64_t budget = kDefaultOracleBudget);

}  // namespace vhl
