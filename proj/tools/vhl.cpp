#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "vhl/fast_viterbi.hpp"
#include "vhl/instance.hpp"
#include "vhl/kernels.hpp"
#include "vhl/minplus.hpp"
#include "vhl/normalize.hpp"
#include "vhl/oracles.hpp"
#include "vhl/reductions.hpp"
#include "vhl/rng.hpp"
#include "vhl/serialize.hpp"
#include "vhl/viterbi.hpp"
#include "vhl/walk.hpp"

namespace {

using vhl::ExtCost;
using vhl::Json;

std::string join_ints(const std::vector<int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

std::string sanitize_key(std::string s) {
  std::replace(s.begin(), s.end(), ' ', '_');
  return s;
}

struct WeightRange {
  std::int64_t lo = 1;
  std::int64_t hi = 9;
};

WeightRange parse_weight_range(const std::string& text) {
  auto pos = text.find("..");
  if (pos == std::string::npos) {
    throw CLI::ValidationError("--weights", "expected LO..HI, got '" + text + "'");
  }
  WeightRange r;
  try {
    r.lo = std::stoll(text.substr(0, pos));
    r.hi = std::stoll(text.substr(pos + 2));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--weights", "expected LO..HI, got '" + text + "'");
  }
  if (r.lo < 1 || r.hi < r.lo) {
    throw CLI::ValidationError("--weights", "need 1 <= LO <= HI");
  }
  return r;
}

ExtCost parse_threshold(const std::string& text) {
  if (text == "inf") return ExtCost::inf();
  try {
    return ExtCost::from_raw(std::stod(text));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--threshold", "expected a non-negative number or 'inf'");
  }
}

// ------------------------------- gen ------------------------------------

int cmd_gen(const std::string& kind, const std::vector<int>& sizes,
            const std::string& weights, std::uint64_t seed, const std::string& out) {
  if (kind == "3partite" && sizes.size() != 3) {
    throw std::runtime_error("3partite needs exactly 3 part sizes");
  }
  if (kind != "3partite" && kind != "kpartite") {
    throw std::runtime_error("unknown kind '" + kind + "' (use 3partite or kpartite)");
  }
  WeightRange range = parse_weight_range(weights);
  vhl::KPartiteGraph g(sizes);
  vhl::Rng rng(seed);
  for (int a = 0; a < g.parts(); ++a) {
    for (int b = a + 1; b < g.parts(); ++b) {
      for (int va = 0; va < g.part_size(a); ++va) {
        for (int vb = 0; vb < g.part_size(b); ++vb) {
          g.set_weight(a, va, b, vb, rng.next_int(range.lo, range.hi));
        }
      }
    }
  }
  vhl::write_text_file(out, vhl::to_file_string(vhl::graph_to_json(g)));
  std::cout << "kind=" << kind << " parts=" << join_ints(sizes) << " weights=" << weights
            << " seed=" << seed << " file=" << out << "\n";
  return 0;
}

// ------------------------------ reduce ----------------------------------

int cmd_reduce(const std::string& graph_file, const std::string& reduction,
               const std::string& out, const std::string& meta_out) {
  vhl::KPartiteGraph g = vhl::graph_from_json(vhl::parse_json_file(graph_file));
  vhl::ReductionMetadata meta;
  meta.reduction = reduction;

  vhl::HmmInstance inst(1, 1, 0);
  vhl::ObservationSequence obs;
  if (reduction == "triangle") {
    vhl::TriangleReduction r = vhl::triangle_to_viterbi(g);
    inst = std::move(r.instance);
    obs = std::move(r.obs);
    meta.cost_offset = r.cost_offset;
    meta.triangle = r.layout;
  } else if (reduction == "kclique") {
    vhl::CliqueReduction r = vhl::kclique_to_viterbi(g);
    inst = std::move(r.instance);
    obs = std::move(r.obs);
    meta.cost_offset = r.cost_offset;
    meta.clique = r.layout;
  } else if (reduction == "walk") {
    vhl::WalkReduction r = vhl::triangle_to_walk(g);
    inst = vhl::walk_to_instance(r.walk);
    obs = vhl::walk_observations(r.walk);
    meta.cost_offset = r.cost_offset;
    meta.walk = r.layout;
  } else {
    throw std::runtime_error("unknown reduction '" + reduction +
                             "' (use triangle, kclique, or walk)");
  }

  vhl::write_text_file(out, vhl::to_file_string(vhl::instance_to_json(inst, obs)));
  vhl::write_text_file(meta_out, vhl::to_file_string(vhl::metadata_to_json(meta)));
  std::cout << "reduction=" << reduction << " states=" << inst.n << " sigma=" << inst.sigma
            << " T=" << obs.length() << " cost_offset=" << vhl::format_cost(meta.cost_offset)
            << " instance=" << out << " metadata=" << meta_out << "\n";
  return 0;
}

// ------------------------------- solve ----------------------------------

vhl::WalkInstance as_walk(const vhl::HmmInstance& inst, const vhl::ObservationSequence& obs) {
  if (inst.sigma != 1) {
    throw std::runtime_error("walk algorithms need a single-symbol instance");
  }
  for (int i = 0; i < inst.n; ++i) {
    if (inst.emission.raw_at(i, 0) != 0.0) {
      throw std::runtime_error("walk algorithms need all-zero emission costs");
    }
  }
  if (obs.length() < 1) throw std::runtime_error("walk needs at least one step");
  return vhl::WalkInstance(inst.transition, obs.length(), inst.start_state);
}

void print_witness(const vhl::ReductionMetadata& meta, const vhl::HmmInstance& inst,
                   const vhl::ObservationSequence& obs, const std::vector<int>& path,
                   double raw_cost) {
  std::cout << "offset=" << vhl::format_cost(meta.cost_offset);
  if (std::isinf(raw_cost)) {
    std::cout << " value=inf\n";
    return;
  }
  std::cout << " value=" << vhl::format_cost(raw_cost - meta.cost_offset.raw());
  if (meta.triangle) {
    vhl::TriangleWitness w = vhl::recover_triangle(*meta.triangle, obs, path);
    std::cout << " witness=" << w.v1 << "," << w.v2 << "," << w.u;
  } else if (meta.clique) {
    vhl::CliqueWitness w = vhl::recover_clique(*meta.clique, path);
    std::cout << " witness=" << w.v1 << "," << w.v2 << "," << join_ints(w.u);
  } else if (meta.walk) {
    vhl::TriangleWitness w = vhl::recover_walk_triangle(*meta.walk, path);
    std::cout << " witness=" << w.v1 << "," << w.v2 << "," << w.u;
  }
  std::cout << "\n";
  (void)inst;
}

int cmd_solve(const std::string& instance_file, const std::string& algo,
              const std::string& meta_file, int omv_buckets, const std::string& substrate,
              const std::string& certificate_out) {
  auto [inst, obs] = vhl::instance_from_json(vhl::parse_json_file(instance_file));

  vhl::OmvConfig cfg;
  cfg.bucket_count = omv_buckets;
  if (substrate == "naive") {
    cfg.substrate = vhl::Substrate::kNaive;
  } else if (substrate == "bitpacked") {
    cfg.substrate = vhl::Substrate::kBitpacked;
  } else {
    throw std::runtime_error("unknown substrate '" + substrate + "'");
  }

  vhl::DecodeResult result;
  bool have_path = true;
  if (algo == "dp") {
    result = vhl::viterbi_decode(inst, obs);
  } else if (algo == "fast") {
    vhl::DistinctValueDecomposition d = vhl::decompose(inst.transition);
    double bound = vhl::distinct_value_regime_bound(inst.n);
    if (d.distinct_count() > bound) {
      std::cerr << "warning=distinct_values d=" << d.distinct_count()
                << " bound=" << bound << "\n";
    }
    result = vhl::fast_viterbi(inst, obs, cfg);
  } else if (algo == "walk-dp") {
    result = vhl::walk_solve_dp(as_walk(inst, obs));
  } else if (algo == "walk-squaring") {
    result.cost = vhl::walk_solve_squaring(as_walk(inst, obs));
    have_path = false;
  } else {
    throw std::runtime_error("unknown algo '" + algo +
                             "' (use dp, fast, walk-dp, or walk-squaring)");
  }

  std::cout << "algo=" << algo << " cost=" << vhl::format_cost(result.cost) << "\n";
  if (have_path) {
    std::cout << "path=" << join_ints(result.path) << "\n";
  }

  if (!meta_file.empty()) {
    vhl::ReductionMetadata meta = vhl::metadata_from_json(vhl::parse_json_file(meta_file));
    if (!have_path) {
      std::cout << "offset=" << vhl::format_cost(meta.cost_offset) << " value="
                << vhl::format_cost(result.cost.is_inf()
                                        ? vhl::kInf
                                        : result.cost.raw() - meta.cost_offset.raw())
                << "\n";
    } else {
      print_witness(meta, inst, obs, result.path, result.cost.raw());
    }
  }

  if (!certificate_out.empty()) {
    if (!have_path) {
      throw std::runtime_error("certificates need a forward-vector algorithm (dp or fast)");
    }
    std::vector<vhl::CostVector> vectors = vhl::forward_vectors(inst, obs);
    vhl::write_text_file(certificate_out,
                         vhl::to_file_string(vhl::certificate_to_json(vectors)));
    std::cout << "certificate=" << certificate_out << "\n";
  }
  return 0;
}

// ------------------------------ oracle ----------------------------------

int cmd_oracle(const std::string& graph_file, const std::string& problem,
               std::int64_t budget) {
  vhl::KPartiteGraph g = vhl::graph_from_json(vhl::parse_json_file(graph_file));
  vhl::CliqueSearchResult r;
  if (problem == "triangle") {
    r = vhl::min_triangle_bf(g);
  } else if (problem == "kclique") {
    r = vhl::min_kclique_bf(g, budget);
  } else {
    throw std::runtime_error("unknown problem '" + problem + "' (use triangle or kclique)");
  }
  std::cout << "problem=" << problem << " weight=" << r.weight
            << " witness=" << join_ints(r.witness) << "\n";
  return 0;
}

// ------------------------------ verify ----------------------------------

int cmd_verify(const std::string& instance_file, const std::string& certificate_file,
               const std::string& threshold_text) {
  auto [inst, obs] = vhl::instance_from_json(vhl::parse_json_file(instance_file));
  std::vector<vhl::CostVector> vectors =
      vhl::certificate_from_json(vhl::parse_json_file(certificate_file));
  ExtCost threshold = parse_threshold(threshold_text);
  vhl::CertificateOutcome outcome =
      vhl::verify_cost_certificate(inst, obs, vectors, threshold);
  if (outcome.accepted) {
    std::cout << "result=accept\n";
    return 0;
  }
  std::cout << "result=reject reason=" << sanitize_key(outcome.reason)
            << " t=" << outcome.t << " index=" << outcome.index << "\n";
  return 1;
}

// ------------------------------- bench ----------------------------------

int cmd_bench(int n, int d, int reps, std::uint64_t seed, const std::string& substrate) {
  if (n < 1 || d < 1 || reps < 1) throw std::runtime_error("bench needs positive n, d, reps");
  vhl::OmvConfig cfg;
  if (substrate == "naive") {
    cfg.substrate = vhl::Substrate::kNaive;
  } else if (substrate == "bitpacked") {
    cfg.substrate = vhl::Substrate::kBitpacked;
  } else {
    throw std::runtime_error("unknown substrate '" + substrate + "'");
  }

  vhl::Rng rng(seed);
  std::vector<double> values(d);
  for (int i = 0; i < d; ++i) values[i] = static_cast<double>(rng.next_int(1, 1000));
  vhl::CostMatrix a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      a.set(i, j, ExtCost::finite(values[rng.next_int(0, d - 1)]));
    }
  }
  vhl::DistinctValueDecomposition decomp = vhl::decompose(a);
  double bound = vhl::distinct_value_regime_bound(n);
  if (decomp.distinct_count() > bound) {
    std::cerr << "warning=distinct_values d=" << decomp.distinct_count()
              << " bound=" << bound << "\n";
  }

  using Clock = std::chrono::steady_clock;
  std::vector<double> naive_ms, decomposed_ms, ratios;
  for (int rep = 0; rep < reps; ++rep) {
    vhl::CostVector v(n);
    for (int i = 0; i < n; ++i) {
      v.set(i, ExtCost::finite(rng.next_unit() * 1000.0));
    }

    auto t0 = Clock::now();
    vhl::CostVector dense = vhl::mv_minplus(a, v);
    auto t1 = Clock::now();
    vhl::OmvResult fast = vhl::omv_query(decomp, v, cfg);
    auto t2 = Clock::now();

    if (!(fast.values == dense)) {
      throw std::logic_error("decomposed query disagreed with the dense product");
    }
    double nm = std::chrono::duration<double, std::milli>(t1 - t0).count();
    double dm = std::chrono::duration<double, std::milli>(t2 - t1).count();
    naive_ms.push_back(nm);
    decomposed_ms.push_back(dm);
    ratios.push_back(nm / dm);
  }

  auto median = [](std::vector<double> xs) {
    std::sort(xs.begin(), xs.end());
    return xs[xs.size() / 2];
  };
  int buckets = cfg.bucket_count == 0 ? vhl::auto_bucket_count(n) : cfg.bucket_count;
  std::cout << "n=" << n << " d=" << d << " substrate=" << substrate << " buckets=" << buckets
            << " reps=" << reps << " simd=" << vhl::kernels::active().name
            << " naive_ms=" << median(naive_ms) << " decomposed_ms=" << median(decomposed_ms)
            << " speedup=" << median(ratios) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tropical decoding engine and graph embedding toolkit"};
  app.require_subcommand(1);

  // gen
  std::string gen_kind;
  std::vector<int> gen_sizes;
  std::string gen_weights = "1..9";
  std::uint64_t gen_seed = 1;
  std::string gen_out = "graph.json";
  CLI::App* gen = app.add_subcommand("gen", "Generate a random k-partite graph");
  gen->add_option("kind", gen_kind, "3partite or kpartite")->required();
  gen->add_option("sizes", gen_sizes, "part sizes")->required()->expected(-2);
  gen->add_option("--weights", gen_weights, "weight range LO..HI");
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("-o,--out", gen_out, "output graph file");

  // reduce
  std::string red_graph, red_name, red_out = "instance.json", red_meta = "metadata.json";
  CLI::App* reduce = app.add_subcommand("reduce", "Embed a graph problem into an instance");
  reduce->add_option("graph", red_graph, "input graph file")->required();
  reduce->add_option("--reduction", red_name, "triangle, kclique, or walk")->required();
  reduce->add_option("-o,--out", red_out, "output instance file");
  reduce->add_option("--metadata", red_meta, "output metadata file");

  // solve
  std::string sol_inst, sol_algo = "dp", sol_meta, sol_substrate = "bitpacked", sol_cert;
  int sol_buckets = 0;
  CLI::App* solve = app.add_subcommand("solve", "Decode an instance");
  solve->add_option("instance", sol_inst, "instance file")->required();
  solve->add_option("--algo", sol_algo, "dp, fast, walk-dp, or walk-squaring");
  solve->add_option("--metadata", sol_meta, "metadata file for witness recovery");
  solve->add_option("--omv-buckets", sol_buckets, "bucket count for fast (0 = auto)");
  solve->add_option("--omv-substrate", sol_substrate, "naive or bitpacked");
  solve->add_option("--certificate-out", sol_cert, "write the forward-vector chain");

  // oracle
  std::string ora_graph, ora_problem;
  std::int64_t ora_budget = vhl::kDefaultOracleBudget;
  CLI::App* oracle = app.add_subcommand("oracle", "Exhaustive graph search");
  oracle->add_option("graph", ora_graph, "input graph file")->required();
  oracle->add_option("--problem", ora_problem, "triangle or kclique")->required();
  oracle->add_option("--budget", ora_budget, "tuple budget");

  // verify
  std::string ver_inst, ver_cert, ver_threshold;
  CLI::App* verify = app.add_subcommand("verify", "Check a cost certificate");
  verify->add_option("instance", ver_inst, "instance file")->required();
  verify->add_option("certificate", ver_cert, "certificate file")->required();
  verify->add_option("--threshold", ver_threshold, "cost threshold (number or inf)")
      ->required();

  // bench
  int bench_n = 4096, bench_d = 4, bench_reps = 5;
  std::uint64_t bench_seed = 1;
  std::string bench_substrate = "bitpacked";
  CLI::App* bench = app.add_subcommand("bench", "Compare dense and decomposed queries");
  bench->add_option("--n", bench_n, "matrix dimension");
  bench->add_option("--d", bench_d, "distinct transition values");
  bench->add_option("--reps", bench_reps, "repetitions (median reported)");
  bench->add_option("--seed", bench_seed, "random seed");
  bench->add_option("--substrate", bench_substrate, "naive or bitpacked");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_gen(gen_kind, gen_sizes, gen_weights, gen_seed, gen_out);
    if (reduce->parsed()) return cmd_reduce(red_graph, red_name, red_out, red_meta);
    if (solve->parsed()) {
      return cmd_solve(sol_inst, sol_algo, sol_meta, sol_buckets, sol_substrate, sol_cert);
    }
    if (oracle->parsed()) return cmd_oracle(ora_graph, ora_problem, ora_budget);
    if (verify->parsed()) return cmd_verify(ver_inst, ver_cert, ver_threshold);
    if (bench->parsed()) {
      return cmd_bench(bench_n, bench_d, bench_reps, bench_seed, bench_substrate);
    }
  } catch (const std::exception& e) {
    std::cout << "error=\"" << e.what() << "\"\n";
    return 2;
  }
  return 0;
}
