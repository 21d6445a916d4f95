#pragma once

#include "vhl/instance.hpp"
#include "vhl/minplus.hpp"

namespace vhl {

/// The walk problem phrased as a decoding instance: one symbol, zero
/// emission costs, edge costs as transitions, observations of length
/// `steps`.
HmmInstance walk_to_instance(const WalkInstance& w);
ObservationSequence walk_observations(const WalkInstance& w);

/// Exact solve via the decoding dynamic program on the single-symbol
/// embedding. The result path lists the visited nodes.
DecodeResult walk_solve_dp(const WalkInstance& w);

/// Exact solve via repeated squaring of the edge matrix under the (min,+)
/// product: the value is the smallest entry in the start row of the
/// steps-th power. Agrees exactly with walk_solve_dp on integer-valued
/// costs, where every intermediate sum is exact.
ExtCost walk_solve_squaring(const WalkInstance& w);

}  // namespace vhl
