// analysis.hpp -- surpluses, renaming, destinations, the distance potential and
// the termination bounds of the two-colour algorithm.

#pragma once

#include <span>
#include <vector>

#include "ringform/core.hpp"

namespace ringform {

/// Two-colour projection of an instance. Agents of `primary` play the blue role,
/// every other colour is merged into red. `quota[j-1]` is the required (P1) or
/// minimum (P2Restricted) number of primary agents in block j.
struct TwoColourView {
  Colour primary = 1;
  std::vector<int> quota;
  /// n_b^* = min_j quota
  int cap = 1;
  /// Primary agents beyond sum(quota): 0 for P1, d for P2Restricted.
  int surplus = 0;

  int k() const { return static_cast<int>(quota.size()); }
  bool is_blue(const Agent& a) const { return a.colour == primary; }
};

/// Projects `inst` onto `primary` vs everything else.
TwoColourView project(const Instance& inst, Colour primary = 1);

/// True when N_b/n_b^* > N_r/n_r^* for a two-colour P1 instance, i.e. the red
/// agents should play the blue role. A zero minimum counts as an infinite ratio.
/// Throws std::invalid_argument when both minima are zero.
bool roles_reversed(const Instance& inst);

struct SurplusProfile {
  /// y[j-1] = n_b(S_j) - n_b(j)
  std::vector<int> y;

  int k() const { return static_cast<int>(y.size()); }
  int total() const;
};

SurplusProfile surplus_profile(const Configuration& cfg, const TwoColourView& view);

/// y(C, start, length): sum of `length` consecutive surpluses from block `start`,
/// wrapping around the ring. Throws std::out_of_range outside [1, k].
int cumulative_surplus(const SurplusProfile& profile, int start, int length);

/// y(C, start) = max over length of cumulative_surplus(profile, start, length).
int max_cumulative_surplus(const SurplusProfile& profile, int start);

/// Block that becomes S_1 after renaming: j+1 where j is the smallest index
/// maximising the prefix sums of `profile`. Every cumulative surplus starting
/// there is at most the total surplus.
int rename_offset(const SurplusProfile& profile);

/// Original block index of renamed block `renamed` (both 1-based).
inline int original_block(int renamed, int offset, int k) { return (offset - 1 + renamed - 1) % k + 1; }
/// Renamed block index of original block `block`.
inline int renamed_block(int block, int offset, int k) { return (block - offset + k) % k + 1; }

/// Quotas listed in renamed order.
std::vector<int> renamed_quota(const TwoColourView& view, int offset);

/// dest(i) for ranks i = 1..blue_total, as renamed block indices: the smallest l
/// with sum_{j<=l} quota_j + surplus >= i. With surplus = 0 the leftmost quota_1
/// agents belong to S_1, the next quota_2 to S_2, and so on. Throws
/// std::invalid_argument if blue_total exceeds sum(quota) + surplus.
std::vector<int> destinations(std::span<const int> quota_in_renamed_order, int blue_total, int surplus = 0);

struct DistanceReport {
  int rename_offset = 1;
  std::vector<int> dest;
  /// Indexed by rank - 1; current renamed block minus dest.
  std::vector<int> displacement;
  long long d = 0;
};

/// d(C): blue agents are ranked left to right starting at the first node of
/// renamed S_1.
DistanceReport distance(const Configuration& cfg, const TwoColourView& view, int rename_offset,
                        std::span<const int> dest);

/// Renaming, destinations and view fixed from an initial configuration.
struct DistanceFrame {
  TwoColourView view;
  int rename_offset = 1;
  std::vector<int> dest;
};

DistanceFrame make_frame(const Configuration& initial, const TwoColourView& view);
inline long long distance(const Configuration& cfg, const DistanceFrame& frame) {
  return distance(cfg, frame.view, frame.rename_offset, frame.dest).d;
}

/// Blue agents (by rank, renamed coordinates) of the renamed position order.
std::vector<AgentId> blue_ranking(const Configuration& cfg, const TwoColourView& view, int rename_offset);

/// B_1..B_L: consecutive groups of `cap` ranks, the last one possibly shorter.
struct BluePartition {
  int cap = 1;
  /// classes[l-1] lists the 1-based ranks of B_l.
  std::vector<std::vector<int>> classes;

  int size() const { return static_cast<int>(classes.size()); }
  int class_of(int rank) const { return (rank - 1) / cap + 1; }
};

/// Throws std::invalid_argument when cap <= 0.
BluePartition blue_partition(int blue_total, int cap);

struct Bound {
  long long value = 0;
  /// True only for the proven two-colour even-k bound.
  bool tight = false;
};

/// Generic cap used as the default round budget: 4nk + 16.
long long generic_round_cap(const Instance& inst);

/// Two-colour P1: ceil(2 N_b / n_b^*) + k + 4 after orientation (even k). Odd k
/// reports three times that value, flagged as not proven. Every other problem
/// kind reports the generic cap.
Bound theoretical_bound(const Instance& inst);

}  // namespace ringform
