#pragma once

#include <cstdint>
#include <vector>

#include "vhl/instance.hpp"
#include "vhl/kpartite.hpp"

namespace vhl {

// ===================== triangle -> decoding instance =====================

/// State and symbol layout of a triangle embedding. Input parts are
/// (V1, V2, U) with sizes (n1, n2, m).
///
/// States: 0 is the hub the path idles on, 1..n1 are V1, n1+1..n1+n2 are
/// V2, and the last state is the sink that absorbs the tail. Symbols:
/// 0..m-1 name U's vertices, then the block separator, then the final
/// marker. Observations run in m blocks (u, u, separator) followed by the
/// final marker, so T = 3m+1.
struct TriangleLayout {
  int n1 = 0;
  int n2 = 0;
  int m = 0;

  [[nodiscard]] int hub_state() const { return 0; }
  [[nodiscard]] int v1_state(int i) const { return 1 + i; }
  [[nodiscard]] int v2_state(int j) const { return 1 + n1 + j; }
  [[nodiscard]] int sink_state() const { return 1 + n1 + n2; }
  [[nodiscard]] int state_count() const { return n1 + n2 + 2; }
  [[nodiscard]] bool is_v1_state(int s) const { return s >= 1 && s <= n1; }
  [[nodiscard]] bool is_v2_state(int s) const { return s > n1 && s < sink_state(); }

  [[nodiscard]] int u_symbol(int u) const { return u; }
  [[nodiscard]] int separator_symbol() const { return m; }
  [[nodiscard]] int final_symbol() const { return m + 1; }
  [[nodiscard]] int sigma() const { return m + 2; }
  [[nodiscard]] int steps() const { return 3 * m + 1; }
};

struct TriangleReduction {
  HmmInstance instance;
  ObservationSequence obs;
  ExtCost cost_offset;
  TriangleLayout layout;
};

/// Embeds minimum-triangle search into a decoding instance: the optimal
/// decode cost equals the minimum triangle weight (offset 0), and the
/// optimal path betrays the triangle. Requires exactly 3 parts.
TriangleReduction triangle_to_viterbi(const KPartiteGraph& g);

struct TriangleWitness {
  int v1 = 0;
  int v2 = 0;
  int u = 0;
};

/// Reads the triangle back out of a decoded path. Throws when the path
/// does not follow the embedding's structure.
TriangleWitness recover_triangle(const TriangleLayout& layout,
                                 const ObservationSequence& obs,
                                 const std::vector<int>& path);

// ===================== k-clique -> decoding instance =====================

/// State and symbol layout of a k-clique embedding, k = p+2 >= 3. Input
/// parts are (V1, V2, U_1..U_p).
///
/// The path idles on state 0, crosses once to the absorbing state 2
/// through a chain that touches one V1 vertex, one V2 vertex, their
/// entry/exit ladders of length p, the relay state 1, and z bit states;
/// the crossing block it picks encodes the chosen U-tuple. Observation
/// blocks have length z+2k, one per U-tuple in lexicographic order, plus
/// a final marker: T = (prod m_i)(z+2k) + 1.
struct CliqueLayout {
  int n1 = 0;
  int n2 = 0;
  std::vector<int> u_sizes;
  int z = 0;

  [[nodiscard]] int p() const { return static_cast<int>(u_sizes.size()); }
  [[nodiscard]] int k() const { return p() + 2; }

  [[nodiscard]] int hub_state() const { return 0; }
  [[nodiscard]] int relay_state() const { return 1; }
  [[nodiscard]] int sink_state() const { return 2; }
  [[nodiscard]] int v1_state(int i) const { return 3 + i; }
  [[nodiscard]] int v2_state(int j) const { return 3 + n1 + j; }
  [[nodiscard]] int entry_state(int v, int i) const {
    return 3 + n1 + n2 + v * p() + i;
  }
  [[nodiscard]] int exit_state(int v, int j) const {
    return 3 + n1 + n2 + n1 * p() + v * p() + j;
  }
  [[nodiscard]] int bit_state(int i) const {
    return 3 + n1 + n2 + (n1 + n2) * p() + i;
  }
  [[nodiscard]] int state_count() const {
    return 3 + n1 + n2 + (n1 + n2) * p() + z;
  }

  [[nodiscard]] int u_symbol_offset(int part) const {
    int off = 0;
    for (int i = 0; i < part; ++i) off += u_sizes[i];
    return off;
  }
  [[nodiscard]] int u_symbol(int part, int u) const { return u_symbol_offset(part) + u; }
  [[nodiscard]] int total_u_symbols() const { return u_symbol_offset(p()); }
  [[nodiscard]] int separator_symbol() const { return total_u_symbols(); }
  [[nodiscard]] int zero_symbol() const { return total_u_symbols() + 1; }
  [[nodiscard]] int one_symbol() const { return total_u_symbols() + 2; }
  [[nodiscard]] int final_symbol() const { return total_u_symbols() + 3; }
  [[nodiscard]] int sigma() const { return total_u_symbols() + 4; }

  [[nodiscard]] int block_length() const { return z + 2 * k(); }
  [[nodiscard]] std::int64_t block_count() const {
    std::int64_t c = 1;
    for (int s : u_sizes) c *= s;
    return c;
  }
  [[nodiscard]] std::int64_t steps() const { return block_count() * block_length() + 1; }
};

struct CliqueReduction {
  HmmInstance instance;
  ObservationSequence obs;
  ExtCost cost_offset;
  CliqueLayout layout;
};

/// Embeds minimum k-clique search into a decoding instance with offset 0.
/// Requires at least 3 parts; the bit-chain width is
/// z = ceil(log2(k^2 * max_weight + 1)), which strictly bounds every
/// clique weight the blocks encode.
CliqueReduction kclique_to_viterbi(const KPartiteGraph& g);

struct CliqueWitness {
  int v1 = 0;
  int v2 = 0;
  std::vector<int> u;  // one vertex per U part
};

/// Reads the clique back out of a decoded path.
CliqueWitness recover_clique(const CliqueLayout& layout, const std::vector<int>& path);

// ======================= triangle -> fixed-step walk =====================

/// Node layout of the walk embedding. Input parts are (V1, V2, U).
///
/// The walk starts at node 0, runs along the U rail, detours once through
/// a V1 and a V2 node back to the matching position on the copy rail, and
/// finishes at the terminal node; the step count m+4 forces the detour to
/// return where it left. All original edges are shifted by c_shift to keep
/// costs non-negative, except the final edge which costs 0, so the optimal
/// walk cost is the minimum triangle weight plus (steps-1)*c_shift.
struct WalkLayout {
  int n1 = 0;
  int n2 = 0;
  int m = 0;
  std::int64_t c_shift = 0;

  [[nodiscard]] int source_node() const { return 0; }
  [[nodiscard]] int rail_node(int i) const { return 1 + i; }
  [[nodiscard]] int v1_node(int i) const { return 1 + m + i; }
  [[nodiscard]] int v2_node(int j) const { return 1 + m + n1 + j; }
  [[nodiscard]] int copy_rail_node(int i) const { return 1 + m + n1 + n2 + i; }
  [[nodiscard]] int terminal_node() const { return 1 + 2 * m + n1 + n2; }
  [[nodiscard]] int node_count() const { return 2 * m + n1 + n2 + 2; }
  [[nodiscard]] bool is_v1_node(int s) const { return s > m && s <= m + n1; }

  [[nodiscard]] int steps() const { return m + 4; }
};

struct WalkReduction {
  WalkInstance walk;
  ExtCost cost_offset;
  WalkLayout layout;
};

/// Embeds minimum-triangle search into a fixed-step walk problem.
/// Requires exactly 3 parts.
WalkReduction triangle_to_walk(const KPartiteGraph& g);

/// Reads the triangle back out of an optimal walk path.
TriangleWitness recover_walk_triangle(const WalkLayout& layout,
                                      const std::vector<int>& path);

// ===================== general graph -> k-partite family ==================

/// Splits minimum k-clique on a general complete graph into complete
/// k-partite subinstances with the given part sizes: vertices are grouped
/// into blocks per part class, one subinstance per choice of k blocks.
/// Vertex sets are padded to a multiple of each part size with virtual
/// vertices. Pairs that cannot belong to a genuine clique (same vertex
/// twice, or a virtual vertex) get weight k^2 * max_weight + 1, heavy
/// enough never to undercut a real clique. The minimum over all
/// subinstance optima equals the minimum k-clique weight of the input.
std::vector<KPartiteGraph> kclique_split(const CompleteGraph& g,
                                         const std::vector<int>& part_sizes);

// ============================ sparse padding =============================

/// Pads an instance to n_target states. New states self-loop at cost 0,
/// are unreachable from the original states, cannot reach them, and emit
/// nothing finitely, so decoding results are unchanged.
HmmInstance pad_sparse(const HmmInstance& inst, int n_target);

}  // namespace vhl
