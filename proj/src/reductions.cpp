#include "vhl/reductions.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace vhl {

namespace {

constexpr std::int64_t kMaxSteps = std::int64_t{1} << 27;
constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

ExtCost weight_cost(std::int64_t w) {
  return ExtCost::finite(static_cast<double>(w));
}

void require_parts(const KPartiteGraph& g, int expected, const char* what) {
  if (g.parts() != expected) {
    throw std::invalid_argument(std::string(what) + " needs exactly " +
                                std::to_string(expected) + " parts, got " +
                                std::to_string(g.parts()));
  }
}

}  // namespace

// ===================== triangle -> decoding instance =====================

TriangleReduction triangle_to_viterbi(const KPartiteGraph& g) {
  require_parts(g, 3, "triangle embedding");
  TriangleLayout lay;
  lay.n1 = g.part_size(0);
  lay.n2 = g.part_size(1);
  lay.m = g.part_size(2);

  HmmInstance inst(lay.state_count(), lay.sigma(), lay.hub_state());

  CostMatrix& a = inst.transition;
  a.set(lay.hub_state(), lay.hub_state(), ExtCost::finite(0.0));
  a.set(lay.sink_state(), lay.sink_state(), ExtCost::finite(0.0));
  for (int i = 0; i < lay.n1; ++i) {
    a.set(lay.hub_state(), lay.v1_state(i), ExtCost::finite(0.0));
    for (int j = 0; j < lay.n2; ++j) {
      a.set(lay.v1_state(i), lay.v2_state(j), weight_cost(g.weight(0, i, 1, j)));
    }
  }
  for (int j = 0; j < lay.n2; ++j) {
    a.set(lay.v2_state(j), lay.sink_state(), ExtCost::finite(0.0));
  }

  CostMatrix& b = inst.emission;
  for (int s = 0; s < lay.sigma(); ++s) {
    b.set(lay.hub_state(), s, ExtCost::finite(0.0));
    b.set(lay.sink_state(), s, ExtCost::finite(0.0));
  }
  b.set(lay.hub_state(), lay.final_symbol(), ExtCost::inf());
  for (int i = 0; i < lay.n1; ++i) {
    for (int u = 0; u < lay.m; ++u) {
      b.set(lay.v1_state(i), lay.u_symbol(u), weight_cost(g.weight(0, i, 2, u)));
    }
  }
  for (int j = 0; j < lay.n2; ++j) {
    for (int u = 0; u < lay.m; ++u) {
      b.set(lay.v2_state(j), lay.u_symbol(u), weight_cost(g.weight(1, j, 2, u)));
    }
  }

  ObservationSequence obs;
  obs.symbols.reserve(lay.steps());
  for (int u = 0; u < lay.m; ++u) {
    obs.symbols.push_back(lay.u_symbol(u));
    obs.symbols.push_back(lay.u_symbol(u));
    obs.symbols.push_back(lay.separator_symbol());
  }
  obs.symbols.push_back(lay.final_symbol());

  return TriangleReduction{std::move(inst), std::move(obs), ExtCost::finite(0.0), lay};
}

TriangleWitness recover_triangle(const TriangleLayout& layout,
                                 const ObservationSequence& obs,
                                 const std::vector<int>& path) {
  if (static_cast<int>(path.size()) != layout.steps() + 1 ||
      obs.length() != layout.steps()) {
    throw std::invalid_argument("path or observations do not match the layout");
  }
  for (int t = 1; t <= layout.steps(); ++t) {
    if (path[t] == layout.hub_state()) continue;
    if (!layout.is_v1_state(path[t]) || t + 1 > layout.steps() ||
        !layout.is_v2_state(path[t + 1])) {
      throw std::invalid_argument("path does not follow the embedding");
    }
    int u = obs.symbols[t - 1];
    if (u < 0 || u >= layout.m) {
      throw std::invalid_argument("path leaves the hub outside a vertex block");
    }
    TriangleWitness w;
    w.v1 = path[t] - layout.v1_state(0);
    w.v2 = path[t + 1] - layout.v2_state(0);
    w.u = u;
    return w;
  }
  throw std::invalid_argument("path never leaves the hub");
}

// ===================== k-clique -> decoding instance =====================

CliqueReduction kclique_to_viterbi(const KPartiteGraph& g) {
  int k = g.parts();
  if (k < 3) {
    throw std::invalid_argument("clique embedding needs at least 3 parts, got " +
                                std::to_string(k));
  }
  CliqueLayout lay;
  lay.n1 = g.part_size(0);
  lay.n2 = g.part_size(1);
  for (int i = 2; i < k; ++i) lay.u_sizes.push_back(g.part_size(i));
  int p = lay.p();

  std::int64_t bound = static_cast<std::int64_t>(k) * k * g.max_weight();
  lay.z = std::bit_width(static_cast<std::uint64_t>(bound));
  if (lay.z > 52) {
    throw std::invalid_argument("edge weights too large to encode exactly");
  }
  if (lay.steps() > kMaxSteps) {
    throw std::invalid_argument("embedding would need " + std::to_string(lay.steps()) +
                                " steps");
  }

  HmmInstance inst(lay.state_count(), lay.sigma(), lay.hub_state());

  CostMatrix& a = inst.transition;
  a.set(lay.hub_state(), lay.hub_state(), ExtCost::finite(0.0));
  a.set(lay.sink_state(), lay.sink_state(), ExtCost::finite(0.0));
  for (int v = 0; v < lay.n1; ++v) {
    a.set(lay.hub_state(), lay.entry_state(v, 0), ExtCost::finite(0.0));
    for (int i = 0; i + 1 < p; ++i) {
      a.set(lay.entry_state(v, i), lay.entry_state(v, i + 1), ExtCost::finite(0.0));
    }
    a.set(lay.entry_state(v, p - 1), lay.v1_state(v), ExtCost::finite(0.0));
    for (int j = 0; j < lay.n2; ++j) {
      a.set(lay.v1_state(v), lay.v2_state(j), weight_cost(g.weight(0, v, 1, j)));
    }
  }
  for (int v = 0; v < lay.n2; ++v) {
    a.set(lay.v2_state(v), lay.exit_state(v, 0), ExtCost::finite(0.0));
    for (int j = 0; j + 1 < p; ++j) {
      a.set(lay.exit_state(v, j), lay.exit_state(v, j + 1), ExtCost::finite(0.0));
    }
    a.set(lay.exit_state(v, p - 1), lay.relay_state(), ExtCost::finite(0.0));
  }
  a.set(lay.relay_state(), lay.bit_state(0), ExtCost::finite(0.0));
  for (int i = 0; i + 1 < lay.z; ++i) {
    a.set(lay.bit_state(i), lay.bit_state(i + 1), ExtCost::finite(0.0));
  }
  a.set(lay.bit_state(lay.z - 1), lay.sink_state(), ExtCost::finite(0.0));

  CostMatrix b(lay.state_count(), lay.sigma(), ExtCost::finite(0.0));
  for (int v = 0; v < lay.n1; ++v) {
    for (int i = 0; i < p; ++i) {
      for (int u = 0; u < lay.u_sizes[i]; ++u) {
        b.set(lay.entry_state(v, i), lay.u_symbol(i, u),
              weight_cost(g.weight(0, v, 2 + i, u)));
      }
    }
  }
  for (int v = 0; v < lay.n2; ++v) {
    for (int j = 0; j < p; ++j) {
      for (int u = 0; u < lay.u_sizes[j]; ++u) {
        b.set(lay.exit_state(v, j), lay.u_symbol(j, u),
              weight_cost(g.weight(1, v, 2 + j, u)));
      }
    }
  }
  for (int i = 0; i < lay.z; ++i) {
    b.set(lay.bit_state(i), lay.one_symbol(),
          ExtCost::finite(static_cast<double>(std::int64_t{1} << i)));
  }
  for (int s = 0; s < lay.state_count(); ++s) {
    if (s != lay.hub_state() && s != lay.sink_state()) {
      b.set(s, lay.separator_symbol(), ExtCost::inf());
    }
    if (s != lay.sink_state()) {
      b.set(s, lay.final_symbol(), ExtCost::inf());
    }
  }
  inst.emission = std::move(b);

  ObservationSequence obs;
  obs.symbols.reserve(static_cast<std::size_t>(lay.steps()));
  std::vector<int> tuple(p, 0);
  while (true) {
    for (int i = 0; i < p; ++i) obs.symbols.push_back(lay.u_symbol(i, tuple[i]));
    obs.symbols.push_back(lay.zero_symbol());
    obs.symbols.push_back(lay.zero_symbol());
    for (int i = 0; i < p; ++i) obs.symbols.push_back(lay.u_symbol(i, tuple[i]));
    obs.symbols.push_back(lay.zero_symbol());

    std::int64_t w = 0;
    for (int i = 0; i < p; ++i) {
      for (int j = i + 1; j < p; ++j) {
        w += g.weight(2 + i, tuple[i], 2 + j, tuple[j]);
      }
    }
    if (w >= (std::int64_t{1} << lay.z)) {
      throw std::logic_error("binary weight encoder overflow");
    }
    for (int bit = 0; bit < lay.z; ++bit) {
      obs.symbols.push_back(((w >> bit) & 1) ? lay.one_symbol() : lay.zero_symbol());
    }
    obs.symbols.push_back(lay.separator_symbol());

    int pos = p - 1;
    while (pos >= 0 && tuple[pos] == lay.u_sizes[pos] - 1) {
      tuple[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[pos];
  }
  obs.symbols.push_back(lay.final_symbol());

  return CliqueReduction{std::move(inst), std::move(obs), ExtCost::finite(0.0), lay};
}

CliqueWitness recover_clique(const CliqueLayout& layout, const std::vector<int>& path) {
  std::int64_t steps = layout.steps();
  if (static_cast<std::int64_t>(path.size()) != steps + 1) {
    throw std::invalid_argument("path does not match the layout");
  }
  int p = layout.p();
  int entry_base = layout.entry_state(0, 0);
  for (std::int64_t t = 1; t <= steps; ++t) {
    if (path[t] == layout.hub_state()) continue;
    int s = path[t];
    if (s < entry_base || s >= layout.exit_state(0, 0) ||
        (s - entry_base) % p != 0 || (t - 1) % layout.block_length() != 0) {
      throw std::invalid_argument("path does not follow the embedding");
    }
    CliqueWitness w;
    w.v1 = (s - entry_base) / p;
    std::int64_t v2_t = t + p + 1;
    if (v2_t >= static_cast<std::int64_t>(path.size())) {
      throw std::invalid_argument("path does not follow the embedding");
    }
    int v2 = path[v2_t] - layout.v2_state(0);
    if (v2 < 0 || v2 >= layout.n2) {
      throw std::invalid_argument("path does not follow the embedding");
    }
    w.v2 = v2;
    std::int64_t block = (t - 1) / layout.block_length();
    w.u.assign(p, 0);
    for (int i = p - 1; i >= 0; --i) {
      w.u[i] = static_cast<int>(block % layout.u_sizes[i]);
      block /= layout.u_sizes[i];
    }
    return w;
  }
  throw std::invalid_argument("path never leaves the hub");
}

// ======================= triangle -> fixed-step walk =====================

WalkReduction triangle_to_walk(const KPartiteGraph& g) {
  require_parts(g, 3, "walk embedding");
  WalkLayout lay;
  lay.n1 = g.part_size(0);
  lay.n2 = g.part_size(1);
  lay.m = g.part_size(2);
  lay.c_shift = 1 + static_cast<std::int64_t>(lay.steps()) * g.max_weight();

  double offset = static_cast<double>(lay.steps() - 1) * static_cast<double>(lay.c_shift);
  if (offset >= kExactIntegerLimit) {
    throw std::invalid_argument("edge weights too large to encode exactly");
  }

  CostMatrix a(lay.node_count(), lay.node_count(), ExtCost::inf());
  ExtCost shift = weight_cost(lay.c_shift);
  a.set(lay.source_node(), lay.rail_node(0), shift);
  for (int i = 0; i + 1 < lay.m; ++i) {
    a.set(lay.rail_node(i), lay.rail_node(i + 1), shift);
    a.set(lay.copy_rail_node(i), lay.copy_rail_node(i + 1), shift);
  }
  for (int i = 0; i < lay.m; ++i) {
    for (int v = 0; v < lay.n1; ++v) {
      a.set(lay.rail_node(i), lay.v1_node(v),
            weight_cost(g.weight(2, i, 0, v) + lay.c_shift));
    }
  }
  for (int v = 0; v < lay.n1; ++v) {
    for (int u = 0; u < lay.n2; ++u) {
      a.set(lay.v1_node(v), lay.v2_node(u),
            weight_cost(g.weight(0, v, 1, u) + lay.c_shift));
    }
  }
  for (int u = 0; u < lay.n2; ++u) {
    for (int i = 0; i < lay.m; ++i) {
      a.set(lay.v2_node(u), lay.copy_rail_node(i),
            weight_cost(g.weight(1, u, 2, i) + lay.c_shift));
    }
  }
  a.set(lay.copy_rail_node(lay.m - 1), lay.terminal_node(), ExtCost::finite(0.0));

  WalkInstance walk(std::move(a), lay.steps(), lay.source_node());
  return WalkReduction{std::move(walk), ExtCost::finite(offset), lay};
}

TriangleWitness recover_walk_triangle(const WalkLayout& layout,
                                      const std::vector<int>& path) {
  if (static_cast<int>(path.size()) != layout.steps() + 1) {
    throw std::invalid_argument("path does not match the layout");
  }
  for (int t = 1; t < static_cast<int>(path.size()); ++t) {
    if (!layout.is_v1_node(path[t])) continue;
    int u = path[t - 1] - layout.rail_node(0);
    if (u < 0 || u >= layout.m || t + 1 >= static_cast<int>(path.size())) {
      throw std::invalid_argument("path does not follow the embedding");
    }
    int v2 = path[t + 1] - layout.v2_node(0);
    if (v2 < 0 || v2 >= layout.n2) {
      throw std::invalid_argument("path does not follow the embedding");
    }
    TriangleWitness w;
    w.v1 = path[t] - layout.v1_node(0);
    w.v2 = v2;
    w.u = u;
    return w;
  }
  throw std::invalid_argument("path never visits a v1 node");
}

// ===================== general graph -> k-partite family ==================

std::vector<KPartiteGraph> kclique_split(const CompleteGraph& g,
                                         const std::vector<int>& part_sizes) {
  int k = static_cast<int>(part_sizes.size());
  if (k < 2) throw std::invalid_argument("split needs at least two parts");
  for (int s : part_sizes) {
    if (s < 1) throw std::invalid_argument("part sizes must be positive");
  }
  int n = g.size();
  if (n < k) {
    throw std::invalid_argument("graph has fewer vertices than parts");
  }
  std::int64_t heavy = static_cast<std::int64_t>(k) * k * g.max_weight() + 1;

  std::vector<int> blocks(k);
  for (int i = 0; i < k; ++i) {
    blocks[i] = (n + part_sizes[i] - 1) / part_sizes[i];
  }

  std::vector<KPartiteGraph> out;
  std::vector<int> pick(k, 0);
  while (true) {
    KPartiteGraph sub(part_sizes);
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        for (int vi = 0; vi < part_sizes[i]; ++vi) {
          int ga = pick[i] * part_sizes[i] + vi;
          for (int vj = 0; vj < part_sizes[j]; ++vj) {
            int gb = pick[j] * part_sizes[j] + vj;
            std::int64_t w = (ga >= n || gb >= n || ga == gb)
                                 ? heavy
                                 : g.weight(ga, gb);
            sub.set_weight(i, vi, j, vj, w);
          }
        }
      }
    }
    out.push_back(std::move(sub));

    int pos = k - 1;
    while (pos >= 0 && pick[pos] == blocks[pos] - 1) {
      pick[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++pick[pos];
  }
  return out;
}

// ============================ sparse padding =============================

HmmInstance pad_sparse(const HmmInstance& inst, int n_target) {
  if (n_target < inst.n) {
    throw std::invalid_argument("padding target is smaller than the instance");
  }
  HmmInstance out(n_target, inst.sigma, inst.start_state);
  for (int i = 0; i < inst.n; ++i) {
    for (int j = 0; j < inst.n; ++j) {
      out.transition.set(i, j, inst.transition.at(i, j));
    }
    for (int s = 0; s < inst.sigma; ++s) {
      out.emission.set(i, s, inst.emission.at(i, s));
    }
  }
  for (int i = inst.n; i < n_target; ++i) {
    out.transition.set(i, i, ExtCost::finite(0.0));
  }
  out.symbol_names = inst.symbol_names;
  return out;
}

}  // namespace vhl
