#include <vector>

#include "doctest.h"
#include "vhl/oracles.hpp"
#include "vhl/rng.hpp"

using namespace vhl;

namespace {

KPartiteGraph random_graph(Rng& rng, std::vector<int> sizes, std::int64_t lo,
                           std::int64_t hi) {
  KPartiteGraph g(std::move(sizes));
  for (int a = 0; a < g.parts(); ++a) {
    for (int b = a + 1; b < g.parts(); ++b) {
      for (int va = 0; va < g.part_size(a); ++va) {
        for (int vb = 0; vb < g.part_size(b); ++vb) {
          g.set_weight(a, va, b, vb, rng.next_int(lo, hi));
        }
      }
    }
  }
  return g;
}

// Re-enumeration with recursion instead of an odometer, as a second opinion.
void enumerate(const KPartiteGraph& g, int part, std::vector<int>& pick,
               std::int64_t& best, std::vector<int>& witness) {
  if (part == g.parts()) {
    std::int64_t w = 0;
    for (int i = 0; i < g.parts(); ++i) {
      for (int j = i + 1; j < g.parts(); ++j) w += g.weight(i, pick[i], j, pick[j]);
    }
    if (witness.empty() || w < best || (w == best && pick < witness)) {
      best = w;
      witness = pick;
    }
    return;
  }
  for (int v = 0; v < g.part_size(part); ++v) {
    pick[part] = v;
    enumerate(g, part + 1, pick, best, witness);
  }
}

}  // namespace

TEST_CASE("a lone triangle sums its three edges") {
  KPartiteGraph g({1, 1, 1});
  g.set_weight(0, 0, 1, 0, 3);
  g.set_weight(0, 0, 2, 0, 5);
  g.set_weight(1, 0, 2, 0, 7);
  CliqueSearchResult r = min_triangle_bf(g);
  CHECK(r.weight == 15);
  CHECK(r.witness == std::vector<int>{0, 0, 0});
}

TEST_CASE("triangle search requires three parts") {
  CHECK_THROWS_AS(min_triangle_bf(KPartiteGraph({1, 1})), std::invalid_argument);
  CHECK_THROWS_AS(min_triangle_bf(KPartiteGraph({1, 1, 1, 1})), std::invalid_argument);
}

TEST_CASE("unit-weight clique weight counts the pairs") {
  // 4 parts, all weights 1: any clique has C(4,2) = 6 edges
  CliqueSearchResult r = min_kclique_bf(KPartiteGraph({1, 1, 1, 1}));
  CHECK(r.weight == 6);
  CHECK(r.witness == std::vector<int>{0, 0, 0, 0});

  CliqueSearchResult t = min_kclique_bf(KPartiteGraph({2, 3, 2}));
  CHECK(t.weight == 3);
  CHECK(t.witness == std::vector<int>{0, 0, 0});  // ties pick the first tuple
}

TEST_CASE("triangle search ties pick the lexicographically smallest witness") {
  KPartiteGraph g({2, 2, 2});  // all weights 1, every triangle weighs 3
  CliqueSearchResult r = min_triangle_bf(g);
  CHECK(r.weight == 3);
  CHECK(r.witness == std::vector<int>{0, 0, 0});

  // make (1,0,1) uniquely optimal: every other triangle keeps at most one
  // of the three cheap edges, so it weighs at least 5
  KPartiteGraph h({2, 2, 2});
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      h.set_weight(0, a, 1, b, 2);
      h.set_weight(0, a, 2, b, 2);
      h.set_weight(1, a, 2, b, 2);
    }
  }
  h.set_weight(0, 1, 1, 0, 1);
  h.set_weight(0, 1, 2, 1, 1);
  h.set_weight(1, 0, 2, 1, 1);
  r = min_triangle_bf(h);
  CHECK(r.weight == 3);
  CHECK(r.witness == std::vector<int>{1, 0, 1});
}

TEST_CASE("both searches agree with independent re-enumeration") {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<int> sizes;
    int parts = 3 + static_cast<int>(rng.next_int(0, 2));
    for (int i = 0; i < parts; ++i) sizes.push_back(1 + static_cast<int>(rng.next_int(0, 3)));
    KPartiteGraph g = random_graph(rng, sizes, 1, 30);
    CAPTURE(trial);

    std::int64_t best = 0;
    std::vector<int> witness;
    std::vector<int> pick(parts, 0);
    enumerate(g, 0, pick, best, witness);

    CliqueSearchResult r = min_kclique_bf(g);
    CHECK(r.weight == best);
    CHECK(r.witness == witness);

    if (parts == 3) {
      CliqueSearchResult t = min_triangle_bf(g);
      CHECK(t.weight == best);
      CHECK(t.witness == witness);
    }
  }
}

TEST_CASE("clique search refuses oversized graphs") {
  KPartiteGraph g({300, 300, 300, 300});  // 8.1e9 tuples
  CHECK_THROWS_AS(min_kclique_bf(g), std::runtime_error);
  CHECK_NOTHROW(min_kclique_bf(KPartiteGraph({10, 10, 10}), 1000));
  CHECK_THROWS_AS(min_kclique_bf(KPartiteGraph({10, 10, 10}), 999), std::runtime_error);
}
