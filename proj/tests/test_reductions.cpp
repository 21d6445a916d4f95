#include <algorithm>
#include <cmath>
#include <vector>

#include "doctest.h"
#include "vhl/oracles.hpp"
#include "vhl/reductions.hpp"
#include "vhl/rng.hpp"
#include "vhl/viterbi.hpp"
#include "vhl/walk.hpp"

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

std::int64_t triangle_weight(const KPartiteGraph& g, const TriangleWitness& w) {
  return g.weight(0, w.v1, 1, w.v2) + g.weight(0, w.v1, 2, w.u) +
         g.weight(1, w.v2, 2, w.u);
}

std::int64_t clique_weight(const KPartiteGraph& g, const CliqueWitness& w) {
  std::vector<int> pick{w.v1, w.v2};
  pick.insert(pick.end(), w.u.begin(), w.u.end());
  std::int64_t total = 0;
  for (int i = 0; i < g.parts(); ++i) {
    for (int j = i + 1; j < g.parts(); ++j) total += g.weight(i, pick[i], j, pick[j]);
  }
  return total;
}

}  // namespace

TEST_CASE("triangle embedding dimensions are pinned") {
  KPartiteGraph g({2, 3, 5});
  TriangleReduction r = triangle_to_viterbi(g);
  CHECK(r.instance.n == 7);       // hub + 2 + 3 + sink
  CHECK(r.instance.sigma == 7);   // 5 vertex symbols + separator + final
  CHECK(r.obs.length() == 16);    // 3*5 + 1
  CHECK(r.cost_offset.raw() == 0.0);
  CHECK(r.instance.start_state == 0);

  // observation layout: (u, u, separator) per vertex, then the final marker
  for (int u = 0; u < 5; ++u) {
    CHECK(r.obs.symbols[3 * u] == u);
    CHECK(r.obs.symbols[3 * u + 1] == u);
    CHECK(r.obs.symbols[3 * u + 2] == 5);
  }
  CHECK(r.obs.symbols[15] == 6);
  CHECK_THROWS_AS(triangle_to_viterbi(KPartiteGraph({2, 2, 2, 2})),
                  std::invalid_argument);
}

TEST_CASE("a lone triangle decodes to the sum of its edges") {
  KPartiteGraph g({1, 1, 1});
  g.set_weight(0, 0, 1, 0, 4);
  g.set_weight(0, 0, 2, 0, 6);
  g.set_weight(1, 0, 2, 0, 9);
  TriangleReduction r = triangle_to_viterbi(g);
  DecodeResult d = viterbi_decode(r.instance, r.obs);
  CHECK(d.cost.raw() == 19.0);
  TriangleWitness w = recover_triangle(r.layout, r.obs, d.path);
  CHECK(w.v1 == 0);
  CHECK(w.v2 == 0);
  CHECK(w.u == 0);
}

TEST_CASE("triangle embedding matches the exhaustive search") {
  Rng rng(51);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> sizes{1 + static_cast<int>(rng.next_int(0, 4)),
                           1 + static_cast<int>(rng.next_int(0, 4)),
                           1 + static_cast<int>(rng.next_int(0, 4))};
    KPartiteGraph g = random_graph(rng, sizes, 1, 20);
    CAPTURE(trial);

    CliqueSearchResult oracle = min_triangle_bf(g);
    TriangleReduction r = triangle_to_viterbi(g);
    DecodeResult d = viterbi_decode(r.instance, r.obs);
    CHECK(d.cost.raw() == static_cast<double>(oracle.weight));

    TriangleWitness w = recover_triangle(r.layout, r.obs, d.path);
    CHECK(w.v1 >= 0);
    CHECK(w.v1 < sizes[0]);
    CHECK(w.v2 >= 0);
    CHECK(w.v2 < sizes[1]);
    CHECK(w.u >= 0);
    CHECK(w.u < sizes[2]);
    CHECK(triangle_weight(g, w) == oracle.weight);
  }
}

TEST_CASE("clique embedding dimensions are pinned") {
  KPartiteGraph g({2, 2, 2, 2});  // all weights 1
  CliqueReduction r = kclique_to_viterbi(g);
  // k = 4, max weight 1: the bit chain needs bit_width(16) = 5 states
  CHECK(r.layout.z == 5);
  CHECK(r.layout.block_length() == 13);  // z + 2k
  CHECK(r.layout.block_count() == 4);
  CHECK(r.obs.length() == 53);
  CHECK(r.instance.n == 3 + 2 + 2 + 4 * 2 + 5);
  CHECK(r.instance.sigma == 4 + 4);  // four vertex symbols, four markers
  CHECK(r.cost_offset.raw() == 0.0);

  DecodeResult d = viterbi_decode(r.instance, r.obs);
  CHECK(d.cost.raw() == 6.0);  // C(4,2) unit edges
  CliqueWitness w = recover_clique(r.layout, d.path);
  CHECK(clique_weight(g, w) == 6);

  CHECK_THROWS_AS(kclique_to_viterbi(KPartiteGraph({2, 2})), std::invalid_argument);
}

TEST_CASE("clique blocks encode tuple weights in binary, low bit first") {
  KPartiteGraph g({1, 1, 1, 2});
  g.set_weight(2, 0, 3, 0, 11);
  g.set_weight(2, 0, 3, 1, 7);
  CliqueReduction r = kclique_to_viterbi(g);
  const CliqueLayout& lay = r.layout;
  CHECK(lay.z == 8);  // bit_width(16 * 11)
  CHECK(lay.block_count() == 2);

  auto bits_of_block = [&](int block) {
    std::vector<int> bits;
    int base = block * lay.block_length() + 2 * lay.p() + 3;
    for (int i = 0; i < lay.z; ++i) {
      int s = r.obs.symbols[base + i];
      REQUIRE((s == lay.zero_symbol() || s == lay.one_symbol()));
      bits.push_back(s == lay.one_symbol() ? 1 : 0);
    }
    return bits;
  };
  CHECK(bits_of_block(0) == std::vector<int>{1, 1, 0, 1, 0, 0, 0, 0});  // 11
  CHECK(bits_of_block(1) == std::vector<int>{1, 1, 1, 0, 0, 0, 0, 0});  // 7

  // each block opens with the tuple's vertex symbols, repeated mid-block
  for (int block = 0; block < 2; ++block) {
    int base = block * lay.block_length();
    CHECK(r.obs.symbols[base] == lay.u_symbol(0, 0));
    CHECK(r.obs.symbols[base + 1] == lay.u_symbol(1, block));
    CHECK(r.obs.symbols[base + 4] == lay.u_symbol(0, 0));
    CHECK(r.obs.symbols[base + 5] == lay.u_symbol(1, block));
    CHECK(r.obs.symbols[(block + 1) * lay.block_length() - 1] == lay.separator_symbol());
  }
  CHECK(r.obs.symbols[r.obs.length() - 1] == lay.final_symbol());
}

TEST_CASE("clique embedding matches the exhaustive search") {
  Rng rng(52);
  for (int trial = 0; trial < 25; ++trial) {
    int parts = 4 + (trial % 2);
    std::vector<int> sizes;
    for (int i = 0; i < parts; ++i) {
      sizes.push_back(1 + static_cast<int>(rng.next_int(0, parts == 4 ? 2 : 1)));
    }
    KPartiteGraph g = random_graph(rng, sizes, 1, 9);
    CAPTURE(trial);

    CliqueSearchResult oracle = min_kclique_bf(g);
    CliqueReduction r = kclique_to_viterbi(g);
    DecodeResult d = viterbi_decode(r.instance, r.obs);
    CHECK(d.cost.raw() == static_cast<double>(oracle.weight));

    CliqueWitness w = recover_clique(r.layout, d.path);
    CHECK(clique_weight(g, w) == oracle.weight);
  }
}

TEST_CASE("walk embedding dimensions are pinned") {
  KPartiteGraph g({2, 2, 3});
  WalkReduction r = triangle_to_walk(g);
  CHECK(r.layout.steps() == 7);  // m + 4
  CHECK(r.walk.steps == 7);
  CHECK(r.walk.edge_cost.rows() == 12);  // source + rail + v1 + v2 + copy + terminal
  CHECK(r.walk.start_state == 0);
  // every edge is shifted except the final hop into the terminal
  CHECK(r.layout.c_shift == 1 + 7 * g.max_weight());
  CHECK(r.cost_offset.raw() == 6.0 * static_cast<double>(r.layout.c_shift));
  CHECK(r.walk.edge_cost.raw_at(r.layout.copy_rail_node(2), r.layout.terminal_node()) ==
        0.0);
  CHECK_THROWS_AS(triangle_to_walk(KPartiteGraph({2, 2})), std::invalid_argument);
}

TEST_CASE("a lone triangle walks to the sum of its edges plus the shift") {
  KPartiteGraph g({1, 1, 1});
  g.set_weight(0, 0, 1, 0, 2);
  g.set_weight(0, 0, 2, 0, 3);
  g.set_weight(1, 0, 2, 0, 8);
  WalkReduction r = triangle_to_walk(g);
  DecodeResult d = walk_solve_dp(r.walk);
  CHECK(d.cost.raw() - r.cost_offset.raw() == 13.0);
  CHECK(walk_solve_squaring(r.walk) == d.cost);
  TriangleWitness w = recover_walk_triangle(r.layout, d.path);
  CHECK(w.v1 == 0);
  CHECK(w.v2 == 0);
  CHECK(w.u == 0);
}

TEST_CASE("walk embedding matches the exhaustive search") {
  Rng rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> sizes{1 + static_cast<int>(rng.next_int(0, 5)),
                           1 + static_cast<int>(rng.next_int(0, 5)),
                           1 + static_cast<int>(rng.next_int(0, 4))};
    KPartiteGraph g = random_graph(rng, sizes, 1, 20);
    CAPTURE(trial);

    CliqueSearchResult oracle = min_triangle_bf(g);
    WalkReduction r = triangle_to_walk(g);
    DecodeResult d = walk_solve_dp(r.walk);
    CHECK(d.cost.raw() - r.cost_offset.raw() == static_cast<double>(oracle.weight));
    CHECK(walk_solve_squaring(r.walk) == d.cost);

    TriangleWitness w = recover_walk_triangle(r.layout, d.path);
    CHECK(triangle_weight(g, w) == oracle.weight);
  }
}

TEST_CASE("splitting a complete graph covers every block combination") {
  CompleteGraph g(4);  // all weights 1
  std::vector<KPartiteGraph> subs = kclique_split(g, {2, 2, 4});
  CHECK(subs.size() == 4);  // ceil(4/2) * ceil(4/2) * ceil(4/4)

  std::int64_t best = -1;
  for (const KPartiteGraph& sub : subs) {
    CliqueSearchResult r = min_kclique_bf(sub);
    if (best < 0 || r.weight < best) best = r.weight;
  }
  CHECK(best == 3);  // a unit triangle

  CHECK_THROWS_AS(kclique_split(g, {2}), std::invalid_argument);
  CHECK_THROWS_AS(kclique_split(g, {2, 0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(kclique_split(CompleteGraph(2), {1, 1, 1}), std::invalid_argument);
}

TEST_CASE("split minima equal the direct complete-graph search") {
  Rng rng(54);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 3 + static_cast<int>(rng.next_int(0, 6));
    CompleteGraph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) g.set_weight(a, b, rng.next_int(1, 25));
    }
    CAPTURE(trial);

    // independent reference: all unordered vertex triples
    std::int64_t reference = -1;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        for (int c = b + 1; c < n; ++c) {
          std::int64_t w = g.weight(a, b) + g.weight(a, c) + g.weight(b, c);
          if (reference < 0 || w < reference) reference = w;
        }
      }
    }

    std::vector<int> part_sizes{2, 2, 2};
    std::int64_t best = -1;
    for (const KPartiteGraph& sub : kclique_split(g, part_sizes)) {
      CliqueSearchResult r = min_kclique_bf(sub);
      if (best < 0 || r.weight < best) best = r.weight;
    }
    CHECK(best == reference);
  }
}

TEST_CASE("padding adds inert self-looping states") {
  Rng rng(55);
  HmmInstance inst(2, 2, 1);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      inst.transition.set(i, j, ExtCost::finite(static_cast<double>(rng.next_int(0, 5))));
    }
    for (int s = 0; s < 2; ++s) {
      inst.emission.set(i, s, ExtCost::finite(static_cast<double>(rng.next_int(0, 5))));
    }
  }
  ObservationSequence obs{{0, 1, 1, 0}};

  HmmInstance padded = pad_sparse(inst, 5);
  CHECK(padded.n == 5);
  CHECK(padded.sigma == 2);
  CHECK(padded.start_state == 1);

  // exactly three new finite transition entries (the self-loops), none finite
  // in the new emission rows
  int finite_before = 0, finite_after = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) finite_before += std::isfinite(inst.transition.raw_at(i, j));
  }
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) finite_after += std::isfinite(padded.transition.raw_at(i, j));
  }
  CHECK(finite_after == finite_before + 3);
  for (int i = 2; i < 5; ++i) {
    CHECK(padded.transition.raw_at(i, i) == 0.0);
    for (int s = 0; s < 2; ++s) CHECK(std::isinf(padded.emission.raw_at(i, s)));
  }

  DecodeResult original = viterbi_decode(inst, obs);
  DecodeResult grown = viterbi_decode(padded, obs);
  CHECK(original.cost == grown.cost);
  CHECK(original.path == grown.path);

  CHECK_THROWS_AS(pad_sparse(inst, 1), std::invalid_argument);
  CHECK(pad_sparse(inst, 2).transition == inst.transition);
}
