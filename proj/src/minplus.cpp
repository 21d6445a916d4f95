#include "vhl/minplus.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "vhl/kernels.hpp"
#include "vhl/parallel.hpp"

namespace vhl {

namespace {

// Row ranges below this many scalar operations run serially.
constexpr std::int64_t kParallelWork = std::int64_t{1} << 20;

std::int64_t grain_rows(std::int64_t work_per_row) {
  return std::max<std::int64_t>(1, kParallelWork / std::max<std::int64_t>(1, work_per_row));
}

}  // namespace

CostVector mv_minplus(const CostMatrix& a, const CostVector& v) {
  if (a.cols() != v.size()) {
    throw std::invalid_argument("mv_minplus: matrix has " + std::to_string(a.cols()) +
                                " columns, vector has " + std::to_string(v.size()));
  }
  CostVector out(a.rows());
  const auto& k = kernels::active();
  std::size_t n = static_cast<std::size_t>(a.cols());
  parallel_for(a.rows(), grain_rows(a.cols()), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      out.data()[i] = k.minplus_row(a.row(static_cast<int>(i)), v.data(), n);
    }
  });
  return out;
}

CostMatrix mm_minplus(const CostMatrix& a, const CostMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mm_minplus: inner dimensions disagree, " +
                                std::to_string(a.cols()) + " vs " + std::to_string(b.rows()));
  }
  CostMatrix c(a.rows(), b.cols(), ExtCost::inf());
  const auto& k = kernels::active();
  std::size_t cols = static_cast<std::size_t>(b.cols());
  std::int64_t work = static_cast<std::int64_t>(a.cols()) * b.cols();
  parallel_for(a.rows(), grain_rows(work), [&](std::int64_t lo, std::int64_t hi) {
    for (std::int64_t i = lo; i < hi; ++i) {
      double* dst = c.row(static_cast<int>(i));
      const double* arow = a.row(static_cast<int>(i));
      for (int kk = 0; kk < a.cols(); ++kk) {
        double w = arow[kk];
        if (std::isinf(w)) continue;
        k.minplus_axpy(dst, b.row(kk), w, cols);
      }
    }
  });
  return c;
}

CostMatrix tropical_identity(int n) {
  CostMatrix m(n, n, ExtCost::inf());
  for (int i = 0; i < n; ++i) m.set(i, i, ExtCost::finite(0.0));
  return m;
}

CostMatrix tropical_power(const CostMatrix& a, std::int64_t e) {
  if (a.rows() != a.cols()) throw std::invalid_argument("tropical_power: matrix must be square");
  if (e < 1) throw std::invalid_argument("tropical_power: exponent must be at least 1");
  CostMatrix result = tropical_identity(a.rows());
  CostMatrix base = a;
  while (true) {
    if (e & 1) result = mm_minplus(result, base);
    e >>= 1;
    if (e == 0) break;
    base = mm_minplus(base, base);
  }
  return result;
}

DistinctValueDecomposition decompose(const CostMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("decompose: matrix must be square");
  int n = a.rows();
  DistinctValueDecomposition d;
  d.n = n;

  std::map<double, int> index_of;
  for (int i = 0; i < n; ++i) {
    const double* row = a.row(i);
    for (int j = 0; j < n; ++j) {
      if (!std::isinf(row[j])) index_of.emplace(row[j], 0);
    }
  }
  d.values.reserve(index_of.size());
  for (auto& [value, idx] : index_of) {
    idx = static_cast<int>(d.values.size());
    d.values.push_back(value);
  }
  d.masks.assign(d.values.size(), BitMatrix(n, n));
  for (int i = 0; i < n; ++i) {
    const double* row = a.row(i);
    for (int j = 0; j < n; ++j) {
      if (!std::isinf(row[j])) d.masks[index_of.find(row[j])->second].set(i, j);
    }
  }
  return d;
}

CostMatrix reconstruct(const DistinctValueDecomposition& d) {
  CostMatrix a(d.n, d.n, ExtCost::inf());
  for (int k = 0; k < d.distinct_count(); ++k) {
    for (int i = 0; i < d.n; ++i) {
      for (int j = 0; j < d.n; ++j) {
        if (d.masks[k].get(i, j)) a.set(i, j, ExtCost::finite(d.values[k]));
      }
    }
  }
  return a;
}

BitVector bool_mv(const BitMatrix& m, const BitVector& x, Substrate substrate) {
  if (m.cols() != x.size()) {
    throw std::invalid_argument("bool_mv: matrix has " + std::to_string(m.cols()) +
                                " columns, vector has " + std::to_string(x.size()));
  }
  BitVector out(m.rows());
  if (substrate == Substrate::kNaive) {
    for (int i = 0; i < m.rows(); ++i) {
      for (int j = 0; j < m.cols(); ++j) {
        if (m.get(i, j) && x.get(j)) {
          out.set(i);
          break;
        }
      }
    }
    return out;
  }
  const auto& k = kernels::active();
  std::size_t wpr = m.words_per_row();
  parallel_for(m.rows(), grain_rows(static_cast<std::int64_t>(wpr)),
               [&](std::int64_t lo, std::int64_t hi) {
                 for (std::int64_t i = lo; i < hi; ++i) {
                   if (k.bool_row_any(m.row(static_cast<int>(i)), x.words(), wpr)) {
                     out.set(static_cast<int>(i));
                   }
                 }
               });
  return out;
}

int auto_bucket_count(int n) {
  if (n <= 1) return 1;
  double p = std::exp2(std::sqrt(std::log2(static_cast<double>(n))) / 2.0);
  long rounded = std::lround(p);
  if (rounded < 1) rounded = 1;
  if (rounded > n) rounded = n;
  return static_cast<int>(rounded);
}

double distinct_value_regime_bound(int n) {
  if (n <= 1) return 1.0;
  return std::exp2(std::sqrt(std::log2(static_cast<double>(n))));
}

OmvResult omv_query(const DistinctValueDecomposition& d, const CostVector& v,
                    const OmvConfig& cfg) {
  int n = d.n;
  if (v.size() != n) {
    throw std::invalid_argument("omv_query: vector length " + std::to_string(v.size()) +
                                " does not match decomposition size " + std::to_string(n));
  }
  int p = cfg.bucket_count;
  if (p == 0) {
    p = auto_bucket_count(n);
  } else if (p < 1 || (n > 0 && p > n)) {
    throw std::invalid_argument("omv_query: bucket count " + std::to_string(p) +
                                " outside [1," + std::to_string(n) + "]");
  }

  OmvResult res;
  res.values = CostVector(n, ExtCost::inf());
  res.argmins.assign(n, -1);
  if (n == 0) return res;

  // Query positions in nondecreasing value order; ties break on index so
  // the first set position of a row is its smallest attaining column.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    double vx = v.raw_at(x), vy = v.raw_at(y);
    if (vx != vy) return vx < vy;
    return x < y;
  });
  int bucket_size = (n + p - 1) / p;

  std::vector<char> filled(n);
  std::vector<double> row_value(n);
  std::vector<int> row_witness(n);
  BitVector indicator(n);
  struct Fill {
    double value;
    int row;
    int witness;
  };
  std::vector<Fill> batch;

  for (int k = 0; k < d.distinct_count(); ++k) {
    const BitMatrix& mask = d.masks[k];
    std::fill(filled.begin(), filled.end(), 0);
    double last_assigned = -1.0;
    bool any_assigned = false;

    for (int lo = 0; lo < n; lo += bucket_size) {
      int hi = std::min(lo + bucket_size, n);
      indicator.reset();
      for (int pos = lo; pos < hi; ++pos) indicator.set(order[pos]);

      BitVector reached = bool_mv(mask, indicator, cfg.substrate);

      batch.clear();
      const std::uint64_t* words = reached.words();
      for (std::size_t w = 0; w < reached.word_count(); ++w) {
        std::uint64_t bits = words[w];
        while (bits != 0) {
          int i = static_cast<int>(w * 64) + std::countr_zero(bits);
          bits &= bits - 1;
          if (filled[i]) continue;
          // First set position in sorted order carries the row minimum.
          for (int pos = lo; pos < hi; ++pos) {
            int j = order[pos];
            if (mask.get(i, j)) {
              batch.push_back({v.raw_at(j), i, j});
              break;
            }
          }
        }
      }

      std::sort(batch.begin(), batch.end(), [](const Fill& a, const Fill& b) {
        if (a.value != b.value) return a.value < b.value;
        return a.row < b.row;
      });
      for (const Fill& f : batch) {
        if (filled[f.row]) {
          throw std::logic_error("omv_query: row filled twice");
        }
        if (any_assigned && f.value < last_assigned) {
          throw std::logic_error("omv_query: fill values decreased");
        }
        filled[f.row] = 1;
        row_value[f.row] = f.value;
        row_witness[f.row] = f.witness;
        last_assigned = f.value;
        any_assigned = true;
      }
    }

    double a_k = d.values[k];
    for (int i = 0; i < n; ++i) {
      if (!filled[i]) continue;
      double cand = a_k + row_value[i];
      if (std::isinf(cand)) continue;
      double cur = res.values.raw_at(i);
      if (cand < cur) {
        res.values.data()[i] = cand;
        res.argmins[i] = row_witness[i];
      } else if (cand == cur && row_witness[i] < res.argmins[i]) {
        res.argmins[i] = row_witness[i];
      }
    }
  }
  return res;
}

}  // namespace vhl
