#include "vhl/oracles.hpp"

#include <stdexcept>
#include <string>

namespace vhl {

CliqueSearchResult min_triangle_bf(const KPartiteGraph& g) {
  if (g.parts() != 3) {
    throw std::invalid_argument("triangle search needs a 3-partite graph, got " +
                                std::to_string(g.parts()) + " parts");
  }
  CliqueSearchResult best;
  bool found = false;
  for (int a = 0; a < g.part_size(0); ++a) {
    for (int b = 0; b < g.part_size(1); ++b) {
      std::int64_t ab = g.weight(0, a, 1, b);
      for (int c = 0; c < g.part_size(2); ++c) {
        std::int64_t w = ab + g.weight(0, a, 2, c) + g.weight(1, b, 2, c);
        if (!found || w < best.weight) {
          best.weight = w;
          best.witness = {a, b, c};
          found = true;
        }
      }
    }
  }
  return best;
}

CliqueSearchResult min_kclique_bf(const KPartiteGraph& g, std::int64_t budget) {
  int k = g.parts();
  std::int64_t tuples = 1;
  for (int i = 0; i < k; ++i) {
    if (tuples > budget / g.part_size(i)) {
      throw std::runtime_error("oracle budget exceeded: more than " +
                               std::to_string(budget) + " tuples");
    }
    tuples *= g.part_size(i);
  }

  CliqueSearchResult best;
  bool found = false;
  std::vector<int> pick(k, 0);
  while (true) {
    std::int64_t w = 0;
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        w += g.weight(i, pick[i], j, pick[j]);
      }
    }
    if (!found || w < best.weight) {
      best.weight = w;
      best.witness = pick;
      found = true;
    }

    int pos = k - 1;
    while (pos >= 0 && pick[pos] == g.part_size(pos) - 1) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[pos];
  }
  return best;
}

}  // namespace vhl
