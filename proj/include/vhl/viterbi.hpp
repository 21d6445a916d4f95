#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vhl/instance.hpp"

namespace vhl {

/// Cheapest state path of length T+1 consistent with the observations,
/// by the classic O(T n^2) dynamic program over cost-to-reach vectors.
/// Ties resolve to the smallest state index, applied at the final argmin
/// and at every backpointer.
DecodeResult viterbi_decode(const HmmInstance& inst, const ObservationSequence& obs);

/// The chain of cost-to-reach vectors v_0 .. v_T, where v_0 is zero at the
/// start state and infinite elsewhere, and v_t[j] is the cheapest cost of
/// reaching state j after consuming t observations.
std::vector<CostVector> forward_vectors(const HmmInstance& inst,
                                        const ObservationSequence& obs);

/// Total cost of a given path: sum over steps of transition plus emission
/// cost, accumulated left to right. Throws on malformed paths (wrong
/// length, out-of-range state, wrong start).
ExtCost path_cost(const HmmInstance& inst, const ObservationSequence& obs,
                  const std::vector<int>& path);

inline constexpr std::int64_t kDefaultDecodeBudget = std::int64_t{1} << 26;

/// Reference decoder that enumerates all n^T paths. Matches viterbi_decode
/// on every input, including tie handling: among minimum-cost paths it
/// returns the one that is lexicographically smallest when read from the
/// final state backwards, which is exactly the path the backpointer
/// scheme reconstructs. Throws std::runtime_error when n^T exceeds the
/// budget.
DecodeResult brute_force_decode(const HmmInstance& inst, const ObservationSequence& obs,
                                std::int64_t budget = kDefaultDecodeBudget);

/// Outcome of checking a claimed vector chain. For chain violations, t and
/// index locate the first failing entry (scanning t ascending, then index
/// ascending).
struct CertificateOutcome {
  bool accepted = false;
  std::string reason;  // empty when accepted
  int t = -1;
  int index = -1;
};

/// Accepts iff the claimed chain starts at the canonical initial vector,
/// every vector follows from its predecessor by one exact decode step, and
/// the smallest entry of the final vector exceeds the threshold. All
/// comparisons are exact; a single perturbed entry is rejected.
CertificateOutcome verify_cost_certificate(const HmmInstance& inst,
                                           const ObservationSequence& obs,
                                           const std::vector<CostVector>& vectors,
                                           ExtCost threshold);

}  // namespace vhl
