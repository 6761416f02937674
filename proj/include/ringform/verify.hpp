// verify.hpp -- post-hoc checkers over recorded runs.
//
// Every checker is a pure function of a recorded trace (plus the instance it
// came from) and reports the first offending round with its witnesses.

#pragma once

#include <span>
#include <string>
#include <vector>

#include "ringform/analysis.hpp"
#include "ringform/engine.hpp"

namespace ringform {

struct InvariantVerdict {
  std::string name;
  /// First offending round, or -1 when the check passes.
  int round = -1;
  bool pass = true;
  std::string detail;
};

/// Configurations before round 1, after round 1, ... Throws CollisionError if
/// a recorded move set is not a permutation.
std::vector<Configuration> replay(const Configuration& initial, std::span<const RoundTrace> trace);

/// The clockwise cyclic order of primary-colour agent ids is the same in every
/// configuration of the sequence.
InvariantVerdict check_order_preserving(std::span<const Configuration> configs, Colour primary);

/// In renamed coordinates, every prefix surplus y(C,1,j) is at most
/// view.surplus and every suffix surplus y(C,j+1,k-j) is at least 0.
InvariantVerdict check_suffix_property(std::span<const Configuration> configs, const TwoColourView& view,
                                       int rename_offset);

/// No blue agent moves from renamed S_1 to S_k and no red agent from S_k to S_1.
InvariantVerdict check_no_wraparound(std::span<const RoundTrace> trace, std::span<const Configuration> configs,
                                     const TwoColourView& view, int rename_offset);

/// Recorded d is non-negative and non-increasing; once it is 0 no agent moves.
InvariantVerdict check_distance_monotone(std::span<const RoundTrace> trace, long long initial_distance);

/// Whenever d > 0 after round r (r = 0 is the start), d after round r + window is
/// at least one smaller; the look-ahead is clamped at the end of the trace.
InvariantVerdict check_distance_decrease(std::span<const RoundTrace> trace, long long initial_distance, int window);

/// P1: exact counts; P2Restricted: lower bounds on colour 1; P3: exact ring string.
InvariantVerdict check_final(const RunResult& result, const Instance& inst);

/// Independent d(C): walks the ring from renamed S_1, keeps a running
/// requirement threshold, sums block differences. Shares no code with distance().
long long oracle_distance(const Configuration& cfg, const Instance& inst, Colour primary, int rename_offset);

/// Each blue agent of B_l, from round 2l+2 on, moves one block left in every
/// round or sits in its destination block. Ranks come from configs[0].
InvariantVerdict check_cooperativeness(std::span<const Configuration> configs, const DistanceFrame& frame,
                                       const BluePartition& partition);

/// Collision-freedom, window locality, colour conservation and quiescence
/// (no moves after the target holds, k silent rounds when terminated).
InvariantVerdict check_safety(const Instance& inst, const RunResult& result);

/// Recorded d matches the distance recomputed from the replayed configurations.
InvariantVerdict check_recorded_distance(std::span<const RoundTrace> trace, std::span<const Configuration> configs,
                                         const DistanceFrame& frame);

/// Every checker that applies to the instance's problem kind and parity.
std::vector<InvariantVerdict> check_run(const Instance& inst, const RunResult& result);

}  // namespace ringform
