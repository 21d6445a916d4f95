#pragma once

#include "vhl/instance.hpp"
#include "vhl/minplus.hpp"

namespace vhl {

/// Decoder that runs each forward step as a decomposed (min,+) query over
/// the distinct transition values instead of a dense n^2 scan. Produces
/// the same cost, the same forward vectors, and the same path as
/// viterbi_decode, bit for bit; only the per-step algorithm differs.
DecodeResult fast_viterbi(const HmmInstance& inst, const ObservationSequence& obs,
                          const OmvConfig& cfg = {});

}  // namespace vhl
