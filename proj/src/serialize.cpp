#include "vhl/serialize.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vhl {

namespace {

constexpr double kExactIntegerLimit = 9007199254740992.0;  // 2^53

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw std::runtime_error(where + ": " + what);
}

bool is_exact_integer(double v) {
  return std::isfinite(v) && std::floor(v) == v && std::fabs(v) < kExactIntegerLimit;
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) fail(where, std::string("missing field '") + key + "'");
  return *it;
}

int int_field(const Json& j, const char* key, const std::string& where) {
  const Json& f = field(j, key, where);
  if (!f.is_number_integer()) fail(where, std::string("field '") + key + "' must be an integer");
  return f.get<int>();
}

}  // namespace

std::string format_cost(double v) {
  if (std::isinf(v)) return "inf";
  if (is_exact_integer(v)) return std::to_string(static_cast<std::int64_t>(v));
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("cost formatting failed");
  return std::string(buf, ptr);
}

Json cost_to_json(double v) {
  if (std::isinf(v)) return Json("inf");
  if (is_exact_integer(v)) return Json(static_cast<std::int64_t>(v));
  return Json(v);
}

double cost_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    fail(where, "cost string must be \"inf\"");
  }
  if (!j.is_number()) fail(where, "cost must be a number or \"inf\"");
  double v = j.get<double>();
  if (!(v >= 0.0)) fail(where, "cost must be non-negative and not NaN");
  return v;
}

Json graph_to_json(const KPartiteGraph& g) {
  Json j;
  j["part_sizes"] = g.part_sizes();
  Json weights = Json::object();
  for (int a = 0; a < g.parts(); ++a) {
    for (int b = a + 1; b < g.parts(); ++b) {
      Json rows = Json::array();
      for (int va = 0; va < g.part_size(a); ++va) {
        Json row = Json::array();
        for (int vb = 0; vb < g.part_size(b); ++vb) {
          row.push_back(g.weight(a, va, b, vb));
        }
        rows.push_back(std::move(row));
      }
      weights[std::to_string(a) + "-" + std::to_string(b)] = std::move(rows);
    }
  }
  j["weights"] = std::move(weights);
  return j;
}

KPartiteGraph graph_from_json(const Json& j) {
  const std::string where = "graph";
  const Json& sizes = field(j, "part_sizes", where);
  if (!sizes.is_array() || sizes.size() < 2) fail(where, "part_sizes must list at least two parts");
  std::vector<int> part_sizes;
  for (const Json& s : sizes) {
    if (!s.is_number_integer()) fail(where, "part sizes must be integers");
    part_sizes.push_back(s.get<int>());
  }
  KPartiteGraph g(part_sizes);
  const Json& weights = field(j, "weights", where);
  for (int a = 0; a < g.parts(); ++a) {
    for (int b = a + 1; b < g.parts(); ++b) {
      std::string key = std::to_string(a) + "-" + std::to_string(b);
      auto it = weights.find(key);
      if (it == weights.end()) fail(where, "missing weight matrix '" + key + "'");
      const Json& rows = *it;
      if (!rows.is_array() || static_cast<int>(rows.size()) != g.part_size(a)) {
        fail(where, "weight matrix '" + key + "' has the wrong row count");
      }
      for (int va = 0; va < g.part_size(a); ++va) {
        const Json& row = rows[va];
        if (!row.is_array() || static_cast<int>(row.size()) != g.part_size(b)) {
          fail(where, "weight matrix '" + key + "' has the wrong column count");
        }
        for (int vb = 0; vb < g.part_size(b); ++vb) {
          if (!row[vb].is_number_integer()) {
            fail(where, "weights must be integers");
          }
          g.set_weight(a, va, b, vb, row[vb].get<std::int64_t>());
        }
      }
    }
  }
  return g;
}

namespace {

Json matrix_to_json(const CostMatrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(cost_to_json(m.raw_at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CostMatrix matrix_from_json(const Json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    fail(where, "expected " + std::to_string(rows) + " rows");
  }
  CostMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      fail(where, "row " + std::to_string(r) + ": expected " + std::to_string(cols) +
                      " entries");
    }
    for (int c = 0; c < cols; ++c) {
      m.set(r, c,
            ExtCost::from_raw(cost_from_json(
                row[c], where + "(" + std::to_string(r) + "," + std::to_string(c) + ")")));
    }
  }
  return m;
}

}  // namespace

Json instance_to_json(const HmmInstance& inst, const ObservationSequence& obs) {
  Json j;
  j["n"] = inst.n;
  j["sigma"] = inst.sigma;
  j["A"] = matrix_to_json(inst.transition);
  j["B"] = matrix_to_json(inst.emission);
  j["obs"] = obs.symbols;
  j["start_state"] = inst.start_state;
  if (!inst.symbol_names.empty()) {
    Json names = Json::object();
    for (const auto& [sym, name] : inst.symbol_names) {
      names[std::to_string(sym)] = name;
    }
    j["symbol_names"] = std::move(names);
  }
  return j;
}

std::pair<HmmInstance, ObservationSequence> instance_from_json(const Json& j) {
  const std::string where = "instance";
  int n = int_field(j, "n", where);
  int sigma = int_field(j, "sigma", where);
  int start = int_field(j, "start_state", where);
  if (n < 1) fail(where, "n must be positive");
  if (sigma < 1) fail(where, "sigma must be positive");
  if (start < 0 || start >= n) fail(where, "start_state out of range");

  HmmInstance inst(n, sigma, start);
  inst.transition = matrix_from_json(field(j, "A", where), n, n, "A");
  inst.emission = matrix_from_json(field(j, "B", where), n, sigma, "B");

  ObservationSequence obs;
  const Json& symbols = field(j, "obs", where);
  if (!symbols.is_array()) fail(where, "obs must be an array");
  for (const Json& s : symbols) {
    if (!s.is_number_integer()) fail(where, "observations must be integers");
    int sym = s.get<int>();
    if (sym < 0 || sym >= sigma) {
      fail(where, "observation symbol " + std::to_string(sym) + " out of range");
    }
    obs.symbols.push_back(sym);
  }

  if (auto it = j.find("symbol_names"); it != j.end()) {
    for (const auto& [key, value] : it->items()) {
      inst.symbol_names[std::stoi(key)] = value.get<std::string>();
    }
  }
  return {std::move(inst), std::move(obs)};
}

Json certificate_to_json(const std::vector<CostVector>& vectors) {
  Json rows = Json::array();
  for (const CostVector& v : vectors) {
    Json row = Json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(cost_to_json(v.raw_at(i)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["vectors"] = std::move(rows);
  return j;
}

std::vector<CostVector> certificate_from_json(const Json& j) {
  const std::string where = "certificate";
  const Json& rows = field(j, "vectors", where);
  if (!rows.is_array()) fail(where, "vectors must be an array");
  std::vector<CostVector> out;
  for (const Json& row : rows) {
    if (!row.is_array()) fail(where, "each vector must be an array");
    CostVector v(static_cast<int>(row.size()));
    for (int i = 0; i < static_cast<int>(row.size()); ++i) {
      v.set(i, ExtCost::from_raw(cost_from_json(row[i], where)));
    }
    out.push_back(std::move(v));
  }
  return out;
}

Json metadata_to_json(const ReductionMetadata& meta) {
  Json j;
  j["reduction"] = meta.reduction;
  j["cost_offset"] = cost_to_json(meta.cost_offset.raw());
  Json layout = Json::object();
  if (meta.triangle) {
    layout["n1"] = meta.triangle->n1;
    layout["n2"] = meta.triangle->n2;
    layout["m"] = meta.triangle->m;
  } else if (meta.clique) {
    layout["n1"] = meta.clique->n1;
    layout["n2"] = meta.clique->n2;
    layout["u_sizes"] = meta.clique->u_sizes;
    layout["z"] = meta.clique->z;
  } else if (meta.walk) {
    layout["n1"] = meta.walk->n1;
    layout["n2"] = meta.walk->n2;
    layout["m"] = meta.walk->m;
    layout["c_shift"] = meta.walk->c_shift;
  }
  j["layout"] = std::move(layout);
  return j;
}

ReductionMetadata metadata_from_json(const Json& j) {
  const std::string where = "metadata";
  ReductionMetadata meta;
  meta.reduction = field(j, "reduction", where).get<std::string>();
  meta.cost_offset =
      ExtCost::from_raw(cost_from_json(field(j, "cost_offset", where), where));
  const Json& layout = field(j, "layout", where);
  if (meta.reduction == "triangle") {
    TriangleLayout lay;
    lay.n1 = int_field(layout, "n1", where);
    lay.n2 = int_field(layout, "n2", where);
    lay.m = int_field(layout, "m", where);
    meta.triangle = lay;
  } else if (meta.reduction == "kclique") {
    CliqueLayout lay;
    lay.n1 = int_field(layout, "n1", where);
    lay.n2 = int_field(layout, "n2", where);
    lay.z = int_field(layout, "z", where);
    for (const Json& s : field(layout, "u_sizes", where)) {
      lay.u_sizes.push_back(s.get<int>());
    }
    meta.clique = lay;
  } else if (meta.reduction == "walk") {
    WalkLayout lay;
    lay.n1 = int_field(layout, "n1", where);
    lay.n2 = int_field(layout, "n2", where);
    lay.m = int_field(layout, "m", where);
    lay.c_shift = field(layout, "c_shift", where).get<std::int64_t>();
    meta.walk = lay;
  } else {
    fail(where, "unknown reduction '" + meta.reduction + "'");
  }
  return meta;
}

std::string to_file_string(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << content;
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json_file(const std::string& path) {
  try {
    return Json::parse(read_text_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace vhl
