// engine.hpp -- synchronous round-based window-swap algorithms.
//
// Every round pairs adjacent blocks into windows [S_i|S_{i+1}], [S_{i+2}|S_{i+3}], ...
// starting from a pairing offset that advances by one block per round. Windows
// are disjoint, so the per-window steps are evaluated one after the other and
// composed into a single collision-free permutation of the ring.

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ringform/analysis.hpp"
#include "ringform/core.hpp"

namespace ringform {

struct WindowPairing {
  int offset = 1;
  /// (left, right) block pairs, 1-based.
  std::vector<std::pair<int, int>> pairs;
  /// The idle block S_{offset-1} when k is odd.
  std::optional<int> unpaired;
};

WindowPairing pair_windows(int k, int offset);

/// Offset of the round after a round with `offset`: cyclic increment over blocks.
inline int next_offset(int offset, int k) { return offset % k + 1; }

struct Move {
  AgentId agent = 0;
  int from = 0;
  int to = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

/// Net displacement of every agent that changes position in one round.
using MoveSet = std::vector<Move>;

class CollisionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Applies a move set. Throws CollisionError if two agents would share a node,
/// an agent is moved twice, or a move names the wrong agent.
Configuration apply_moves(const Configuration& cfg, const MoveSet& moves);

/// Diff between two arrangements of the same agents.
MoveSet diff(const Configuration& before, const Configuration& after);

enum class Strategy {
  TwoColour,  // window step with the n_b^* cap and blue-before-red ordering
  QColour,    // interleaved phases, optional in-block pattern rearrangement
};

/// Two-colour P1 and restricted P2 use the two-colour step; everything else the q-colour step.
Strategy strategy_for(const Instance& inst);

struct Orientation {
  Instance instance;
  bool reversed = false;
};

/// Swaps colours 1 and 2 when N_b/n_b^* > N_r/n_r^*. Instances with q != 2 or
/// kind != P1 are returned unchanged.
Orientation orient_roles(const Instance& inst);

/// Two-colour view the engine runs with: oriented P1 or merged restricted P2.
TwoColourView engine_view(const Instance& inst);

/// One window of the two-colour algorithm. When the left block has a deficit
/// of blue agents and the right block holds some, t = min(cap, |y_left|,
/// n_b(right)) blue agents move left and t red agents move right; blue agents
/// of both blocks are ordered before red ones, preserving their relative
/// order. Otherwise nothing moves.
MoveSet window_step_two_colour(const Configuration& cfg, int left, int right, const TwoColourView& view);

/// One window of the q-colour algorithm. Finds the smallest colour i < q whose
/// count is wrong in either block; if the left block lacks colour i, swaps the
/// leftmost t colour-i agents of the right block with the leftmost t agents of
/// a larger colour in the left block. With all colours correct and a P3
/// instance, both blocks are rearranged into their patterns. `cap` adds
/// min_j n_i(j) as a third term of the minimum.
MoveSet window_step_q_colour(const Configuration& cfg, int left, int right, const Instance& inst, bool cap = false);

struct EngineOptions {
  /// Round budget before declaring non-termination; negative means 4nk + 16.
  long long max_rounds = -1;
  /// Cap transfers in the q-colour step by min_j n_i(j).
  bool q_colour_cap = false;
};

struct RoundTrace {
  int round = 0;
  int offset = 1;
  MoveSet moves;
  /// counts[j-1] = per-colour counts of block j after the round.
  std::vector<CountVector> counts;
  /// d(C) after the round, for two-colour runs.
  std::optional<long long> distance;
  /// Per-round invariant failures (locality, conservation). Empty when clean.
  std::vector<std::string> violations;
};

struct RunResult {
  bool terminated = false;
  /// Rounds executed before the target condition first held.
  long long rounds_used = 0;
  Bound bound;
  std::vector<RoundTrace> trace;
  Configuration final;
  /// d of the initial configuration, for two-colour runs.
  std::optional<long long> initial_distance;
};

long long default_max_rounds(const Instance& inst);

/// Everything the round function needs that does not change during a run.
struct RoundContext {
  const Instance* instance = nullptr;
  Strategy strategy = Strategy::TwoColour;
  TwoColourView view;
  bool q_colour_cap = false;
  std::optional<DistanceFrame> frame;
};

RoundContext make_context(const Instance& inst, const EngineOptions& opts = {});

std::pair<Configuration, RoundTrace> execute_round(const Configuration& cfg, const RoundContext& ctx, int offset);
std::pair<Configuration, RoundTrace> execute_round(const Configuration& cfg, const Instance& inst, int offset,
                                                   const EngineOptions& opts = {});

/// Runs rounds with a shifting offset (starting at 1) until the target holds,
/// then k more rounds that must be empty. Throws std::invalid_argument if the
/// instance is not valid.
RunResult run(const Instance& inst, const EngineOptions& opts = {});

}  // namespace ringform
