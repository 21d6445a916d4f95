#pragma once

#include <cstdint>
#include <vector>

#include "vhl/bitmatrix.hpp"
#include "vhl/matrix.hpp"

namespace vhl {

/// out[i] = min over j of A(i,j) + v[j]. Requires A.cols == v.size.
CostVector mv_minplus(const CostMatrix& a, const CostVector& v);

/// C(i,j) = min over k of A(i,k) + B(k,j). Requires A.cols == B.rows.
CostMatrix mm_minplus(const CostMatrix& a, const CostMatrix& b);

/// Identity for the (min,+) product: zero diagonal, infinity elsewhere.
CostMatrix tropical_identity(int n);

/// A to the power `e` under the (min,+) product, by repeated squaring.
/// Entry (i,j) is the cheapest walk of exactly e edges from i to j.
/// Requires a square A and e >= 1.
CostMatrix tropical_power(const CostMatrix& a, std::int64_t e);

/// A square cost matrix split by distinct finite value: masks[k] marks the
/// positions holding values[k], with values sorted ascending. Infinite
/// entries appear in no mask. d = values.size() may be 0 (all-infinity
/// matrix).
struct DistinctValueDecomposition {
  int n = 0;
  std::vector<double> values;
  std::vector<BitMatrix> masks;

  [[nodiscard]] int distinct_count() const { return static_cast<int>(values.size()); }
};

/// Splits a square matrix into its distinct-value masks. Exact double
/// comparison; every finite entry lands in exactly one mask.
DistinctValueDecomposition decompose(const CostMatrix& a);

/// Rebuilds the dense matrix from a decomposition (test support).
CostMatrix reconstruct(const DistinctValueDecomposition& d);

/// Boolean matrix-vector product substrate. Both produce identical bits;
/// BITPACKED works a word at a time, NAIVE one bit at a time.
enum class Substrate { kNaive, kBitpacked };

/// out[i] = OR over j of M(i,j) AND x[j]. Requires M.cols == x.size.
BitVector bool_mv(const BitMatrix& m, const BitVector& x, Substrate substrate);

/// Bucket count used when OmvConfig.bucket_count is 0 (automatic):
/// max(1, round(2^(sqrt(log2 n)/2))), clamped to n.
int auto_bucket_count(int n);

/// Threshold on the distinct-value count beyond which the decomposition
/// stops paying off: 2^sqrt(log2 n). Surfaced as a warning, never an error.
double distinct_value_regime_bound(int n);

struct OmvConfig {
  int bucket_count = 0;  // 0 = automatic
  Substrate substrate = Substrate::kBitpacked;
};

/// Result of one decomposed (min,+) matrix-vector query. argmins[i] is a
/// column j attaining values[i] (the smallest such j under exact
/// arithmetic), or -1 when values[i] is infinite.
struct OmvResult {
  CostVector values;
  std::vector<int> argmins;
};

/// Computes mv_minplus(A, v) through the distinct-value decomposition of A:
/// query positions are sorted by value, split into buckets of consecutive
/// sorted positions, and each mask row is filled from the first bucket that
/// reaches it via a Boolean matrix-vector product. Values equal
/// mv_minplus on the reconstructed matrix bit for bit.
///
/// Fill discipline is checked on every call: within one mask, rows are
/// assigned once, in nondecreasing value order. A violation throws
/// std::logic_error.
OmvResult omv_query(const DistinctValueDecomposition& d, const CostVector& v,
                    const OmvConfig& cfg = {});

}  // namespace vhl
