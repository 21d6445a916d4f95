#pragma once

#include <cstdint>
#include <random>

namespace vhl {

/// Seeded random source with pinned derivation rules. std::mt19937_64 has
/// a standard-specified sequence, and the helpers below avoid
/// distribution classes (whose algorithms vary between standard
/// libraries), so equal seeds give identical streams everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// True with probability p.
  bool next_bool(double p) { return next_unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace vhl
