#include "vhl/normalize.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace vhl {

namespace {

double clamp_remainder(double r) { return r < 0.0 ? 0.0 : r; }

}  // namespace

StochasticEmbedding normalize_to_stochastic(const HmmInstance& inst, int steps) {
  if (steps < 1) throw std::invalid_argument("step count must be positive");
  if (inst.sigma > steps) {
    throw std::invalid_argument("alphabet size " + std::to_string(inst.sigma) +
                                " exceeds step count " + std::to_string(steps) +
                                "; emission rows would overflow probability 1");
  }
  int n = inst.n;
  StochasticEmbedding out;
  out.extra_state = n;
  out.extra_symbol = inst.sigma;
  out.value_shift = steps * std::log(static_cast<double>(n)) +
                    steps * std::log(static_cast<double>(steps));

  out.hmm.transition.assign(n + 1, std::vector<double>(n + 1, 0.0));
  out.hmm.emission.assign(n + 1, std::vector<double>(inst.sigma + 1, 0.0));

  for (int u = 0; u < n; ++u) {
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
      double p = std::exp(-inst.transition.raw_at(u, v)) / n;
      out.hmm.transition[u][v] = p;
      sum += p;
    }
    out.hmm.transition[u][n] = clamp_remainder(1.0 - sum);
  }
  out.hmm.transition[n][n] = 1.0;

  for (int u = 0; u < n; ++u) {
    double sum = 0.0;
    for (int s = 0; s < inst.sigma; ++s) {
      double p = std::exp(-inst.emission.raw_at(u, s)) / steps;
      out.hmm.emission[u][s] = p;
      sum += p;
    }
    out.hmm.emission[u][inst.sigma] = clamp_remainder(1.0 - sum);
  }
  out.hmm.emission[n][inst.sigma] = 1.0;
  return out;
}

StochasticWalkEmbedding normalize_walk_unary(const WalkInstance& w) {
  int n = w.edge_cost.rows();
  StochasticWalkEmbedding out;
  out.original_nodes = n;
  out.clique_begin = n;
  out.value_shift = w.steps * std::log(static_cast<double>(n));

  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double c = w.edge_cost.raw_at(i, j);
      if (!std::isinf(c) && c > scale) scale = c;
    }
  }
  out.weight_scale = scale;

  int total = 5 * n;
  double clique_p = 1.0 / (4.0 * n);
  out.hmm.transition.assign(total, std::vector<double>(total, 0.0));
  out.hmm.emission.assign(total, std::vector<double>(1, 1.0));

  for (int u = 0; u < n; ++u) {
    double sum = 0.0;
    for (int v = 0; v < n; ++v) {
      double p = std::exp(-w.edge_cost.raw_at(u, v) / scale) / n;
      out.hmm.transition[u][v] = p;
      sum += p;
    }
    double escape = clamp_remainder(1.0 - sum) / (4.0 * n);
    for (int c = n; c < total; ++c) out.hmm.transition[u][c] = escape;
  }
  for (int c = n; c < total; ++c) {
    for (int d = n; d < total; ++d) out.hmm.transition[c][d] = clique_p;
  }
  return out;
}

HmmInstance stochastic_to_additive(const StochasticHmm& hmm, int start_state) {
  int n = static_cast<int>(hmm.transition.size());
  if (n == 0 || hmm.emission.size() != hmm.transition.size()) {
    throw std::invalid_argument("malformed stochastic model");
  }
  int sigma = static_cast<int>(hmm.emission.front().size());
  HmmInstance inst(n, sigma, start_state);
  for (int u = 0; u < n; ++u) {
    if (static_cast<int>(hmm.transition[u].size()) != n ||
        static_cast<int>(hmm.emission[u].size()) != sigma) {
      throw std::invalid_argument("malformed stochastic model row");
    }
    for (int v = 0; v < n; ++v) {
      double p = hmm.transition[u][v];
      inst.transition.set(u, v,
                          p > 0.0 ? ExtCost::finite(-std::log(p) + 0.0) : ExtCost::inf());
    }
    for (int s = 0; s < sigma; ++s) {
      double p = hmm.emission[u][s];
      inst.emission.set(u, s,
                        p > 0.0 ? ExtCost::finite(-std::log(p) + 0.0) : ExtCost::inf());
    }
  }
  return inst;
}

}  // namespace vhl
