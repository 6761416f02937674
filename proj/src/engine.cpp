// engine.cpp

#include "ringform/engine.hpp"

#include <algorithm>
#include <string>

namespace ringform {

WindowPairing pair_windows(int k, int offset) {
  if (k < 2) throw std::invalid_argument("pairing needs k >= 2");
  if (offset < 1 || offset > k) throw std::out_of_range("pairing offset not in [1, k]");
  WindowPairing pairing;
  pairing.offset = offset;
  for (int step = 0; step + 1 < k; step += 2) {
    const int left = (offset - 1 + step) % k + 1;
    pairing.pairs.emplace_back(left, left % k + 1);
  }
  if (k % 2 == 1) pairing.unpaired = (offset + k - 2) % k + 1;
  return pairing;
}

Configuration apply_moves(const Configuration& cfg, const MoveSet& moves) {
  const int n = cfg.n();
  std::vector<Agent> next(cfg.agents().begin(), cfg.agents().end());
  std::vector<char> vacated(static_cast<std::size_t>(n), 0), filled(static_cast<std::size_t>(n), 0);
  for (const auto& m : moves) {
    if (m.from < 0 || m.from >= n || m.to < 0 || m.to >= n)
      throw CollisionError("move of agent " + std::to_string(m.agent) + " leaves the ring");
    if (cfg[m.from].id != m.agent)
      throw CollisionError("agent " + std::to_string(m.agent) + " is not at position " + std::to_string(m.from));
    if (vacated[static_cast<std::size_t>(m.from)]++)
      throw CollisionError("agent " + std::to_string(m.agent) + " moved twice");
    if (filled[static_cast<std::size_t>(m.to)]++)
      throw CollisionError("two agents move to position " + std::to_string(m.to));
    next[static_cast<std::size_t>(m.to)] = cfg[m.from];
  }
  // Every target must have been vacated, otherwise it now holds two agents.
  for (int x = 0; x < n; ++x)
    if (filled[static_cast<std::size_t>(x)] && !vacated[static_cast<std::size_t>(x)])
      throw CollisionError("position " + std::to_string(x) + " is occupied by an agent that did not move");
  for (int x = 0; x < n; ++x)
    if (vacated[static_cast<std::size_t>(x)] && !filled[static_cast<std::size_t>(x)])
      throw CollisionError("position " + std::to_string(x) + " is left empty");
  return Configuration(cfg.k(), cfg.p(), std::move(next));
}

MoveSet diff(const Configuration& before, const Configuration& after) {
  std::vector<int> where(static_cast<std::size_t>(before.n()), -1);
  for (int x = 0; x < before.n(); ++x) where[static_cast<std::size_t>(before[x].id)] = x;
  MoveSet moves;
  for (int x = 0; x < after.n(); ++x) {
    const int from = where[static_cast<std::size_t>(after[x].id)];
    if (from != x) moves.push_back({after[x].id, from, x});
  }
  return moves;
}

Strategy strategy_for(const Instance& inst) {
  if (inst.spec.kind == Problem::P2Restricted) return Strategy::TwoColour;
  if (inst.spec.kind == Problem::P1 && inst.q == 2) return Strategy::TwoColour;
  return Strategy::QColour;
}

Orientation orient_roles(const Instance& inst) {
  Orientation out{inst, false};
  if (inst.spec.kind != Problem::P1 || inst.q != 2) return out;
  if (!roles_reversed(inst)) return out;
  out.reversed = true;
  std::vector<Agent> agents(inst.initial.agents().begin(), inst.initial.agents().end());
  for (auto& a : agents) a.colour = 3 - a.colour;
  out.instance.initial = Configuration(inst.k(), inst.p(), std::move(agents));
  std::swap(out.instance.spec.required[0], out.instance.spec.required[1]);
  return out;
}

TwoColourView engine_view(const Instance& inst) {
  if (inst.spec.kind == Problem::P1 && inst.q == 2) return project(inst, roles_reversed(inst) ? 2 : 1);
  return project(inst, 1);
}

namespace {

struct Placed {
  Agent agent;
  int from = 0;
};

std::vector<Placed> placed_block(const Configuration& cfg, int block) {
  std::vector<Placed> out;
  const int start = cfg.block_start(block);
  for (int x = 0; x < cfg.p(); ++x) out.push_back({cfg[start + x], start + x});
  return out;
}

void emit(const Configuration& cfg, int block, const std::vector<Placed>& arrangement, MoveSet& moves) {
  const int start = cfg.block_start(block);
  for (int x = 0; x < static_cast<int>(arrangement.size()); ++x)
    if (arrangement[static_cast<std::size_t>(x)].from != start + x)
      moves.push_back({arrangement[static_cast<std::size_t>(x)].agent.id, arrangement[static_cast<std::size_t>(x)].from,
                       start + x});
}

void rearrange_to_pattern(const Configuration& cfg, int block, const std::vector<Colour>& pattern, int q,
                          MoveSet& moves) {
  std::vector<std::vector<Placed>> by_colour(static_cast<std::size_t>(q));
  for (const auto& pl : placed_block(cfg, block)) by_colour[static_cast<std::size_t>(pl.agent.colour - 1)].push_back(pl);
  std::vector<std::size_t> used(static_cast<std::size_t>(q), 0);
  std::vector<Placed> arrangement;
  for (Colour c : pattern) {
    auto& queue = by_colour[static_cast<std::size_t>(c - 1)];
    auto& next = used[static_cast<std::size_t>(c - 1)];
    if (next >= queue.size()) return;  // counts not correct yet; leave the block alone
    arrangement.push_back(queue[next++]);
  }
  emit(cfg, block, arrangement, moves);
}

}  // namespace

MoveSet window_step_two_colour(const Configuration& cfg, int left, int right, const TwoColourView& view) {
  auto lhs = placed_block(cfg, left);
  auto rhs = placed_block(cfg, right);
  auto is_blue = [&](const Placed& pl) { return view.is_blue(pl.agent); };

  const int left_blues = static_cast<int>(std::count_if(lhs.begin(), lhs.end(), is_blue));
  const int right_blues = static_cast<int>(std::count_if(rhs.begin(), rhs.end(), is_blue));
  const int deficit = view.quota[static_cast<std::size_t>(left - 1)] - left_blues;
  if (deficit <= 0 || right_blues == 0) return {};
  const int t = std::min({view.cap, deficit, right_blues});
  if (t <= 0) return {};

  std::vector<Placed> left_blue, left_red, right_blue, right_red;
  for (const auto& pl : lhs) (is_blue(pl) ? left_blue : left_red).push_back(pl);
  for (const auto& pl : rhs) (is_blue(pl) ? right_blue : right_red).push_back(pl);

  // Incoming blues land right after the blues already in the left block; the
  // t leftmost reds of the left block take the vacated front of the right block.
  std::vector<Placed> new_left(left_blue);
  new_left.insert(new_left.end(), right_blue.begin(), right_blue.begin() + t);
  new_left.insert(new_left.end(), left_red.begin() + t, left_red.end());

  std::vector<Placed> new_right(left_red.begin(), left_red.begin() + t);
  new_right.insert(new_right.end(), right_blue.begin() + t, right_blue.end());
  new_right.insert(new_right.end(), right_red.begin(), right_red.end());

  MoveSet moves;
  emit(cfg, left, new_left, moves);
  emit(cfg, right, new_right, moves);
  return moves;
}

MoveSet window_step_q_colour(const Configuration& cfg, int left, int right, const Instance& inst, bool cap) {
  const int q = inst.q;
  const auto& spec = inst.spec;
  const auto have_left = counts(cfg, left, q);
  const auto have_right = counts(cfg, right, q);
  auto n_left = [&](Colour c) { return have_left[static_cast<std::size_t>(c - 1)]; };
  auto n_right = [&](Colour c) { return have_right[static_cast<std::size_t>(c - 1)]; };

  Colour i = 1;
  while (i < q && n_left(i) == spec(i, left) && n_right(i) == spec(i, right)) ++i;

  MoveSet moves;
  if (i < q) {
    if (n_left(i) >= spec(i, left)) return moves;
    int t = std::min(spec(i, left) - n_left(i), n_right(i));
    if (cap) t = std::min(t, spec.min_required(i));
    if (t <= 0) return moves;

    std::vector<int> incoming, outgoing;
    const int rs = cfg.block_start(right), ls = cfg.block_start(left);
    for (int x = 0; x < cfg.p() && static_cast<int>(incoming.size()) < t; ++x)
      if (cfg[rs + x].colour == i) incoming.push_back(rs + x);
    for (int x = 0; x < cfg.p() && static_cast<int>(outgoing.size()) < t; ++x)
      if (cfg[ls + x].colour > i) outgoing.push_back(ls + x);
    // Colours below i are correct in the left block, so it holds at least
    // `deficit` agents of larger colours.
    for (int s = 0; s < t; ++s) {
      moves.push_back({cfg[incoming[static_cast<std::size_t>(s)]].id, incoming[static_cast<std::size_t>(s)],
                       outgoing[static_cast<std::size_t>(s)]});
      moves.push_back({cfg[outgoing[static_cast<std::size_t>(s)]].id, outgoing[static_cast<std::size_t>(s)],
                       incoming[static_cast<std::size_t>(s)]});
    }
    return moves;
  }

  if (spec.kind == Problem::P3) {
    rearrange_to_pattern(cfg, left, spec.patterns[static_cast<std::size_t>(left - 1)], q, moves);
    rearrange_to_pattern(cfg, right, spec.patterns[static_cast<std::size_t>(right - 1)], q, moves);
  }
  return moves;
}

long long default_max_rounds(const Instance& inst) { return generic_round_cap(inst); }

RoundContext make_context(const Instance& inst, const EngineOptions& opts) {
  RoundContext ctx;
  ctx.instance = &inst;
  ctx.strategy = strategy_for(inst);
  ctx.q_colour_cap = opts.q_colour_cap;
  if (ctx.strategy == Strategy::TwoColour) {
    ctx.view = engine_view(inst);
    ctx.frame = make_frame(inst.initial, ctx.view);
  }
  return ctx;
}

std::pair<Configuration, RoundTrace> execute_round(const Configuration& cfg, const RoundContext& ctx, int offset) {
  const Instance& inst = *ctx.instance;
  RoundTrace trace;
  trace.offset = offset;

  const auto pairing = pair_windows(cfg.k(), offset);
  for (const auto& [left, right] : pairing.pairs) {
    auto window = ctx.strategy == Strategy::TwoColour ? window_step_two_colour(cfg, left, right, ctx.view)
                                                      : window_step_q_colour(cfg, left, right, inst, ctx.q_colour_cap);
    for (const auto& m : window) {
      const int from = cfg.block_of(m.from), to = cfg.block_of(m.to);
      if ((from != left && from != right) || (to != left && to != right))
        trace.violations.push_back("locality: agent " + std::to_string(m.agent) + " leaves window [S_" +
                                   std::to_string(left) + "|S_" + std::to_string(right) + "]");
    }
    trace.moves.insert(trace.moves.end(), window.begin(), window.end());
  }

  Configuration next = apply_moves(cfg, trace.moves);
  if (totals(next, inst.q) != totals(cfg, inst.q)) trace.violations.push_back("conservation: colour totals changed");

  trace.counts.reserve(static_cast<std::size_t>(cfg.k()));
  for (int j = 1; j <= cfg.k(); ++j) trace.counts.push_back(counts(next, j, inst.q));
  if (ctx.frame) trace.distance = distance(next, *ctx.frame);
  return {std::move(next), std::move(trace)};
}

std::pair<Configuration, RoundTrace> execute_round(const Configuration& cfg, const Instance& inst, int offset,
                                                   const EngineOptions& opts) {
  return execute_round(cfg, make_context(inst, opts), offset);
}

RunResult run(const Instance& inst, const EngineOptions& opts) {
  const auto report = validate(inst);
  if (!report.valid) throw std::invalid_argument("invalid instance: " + report.describe());

  const auto ctx = make_context(inst, opts);
  const long long budget = opts.max_rounds < 0 ? default_max_rounds(inst) : opts.max_rounds;

  RunResult result;
  result.bound = theoretical_bound(inst);
  if (ctx.frame) result.initial_distance = distance(inst.initial, *ctx.frame);

  Configuration cfg = inst.initial;
  int offset = 1;
  long long round = 0;
  auto step = [&] {
    auto [next, trace] = execute_round(cfg, ctx, offset);
    trace.round = static_cast<int>(++round);
    cfg = std::move(next);
    offset = next_offset(offset, cfg.k());
    result.trace.push_back(std::move(trace));
  };

  while (!target_reached(cfg, inst)) {
    if (round >= budget) {
      result.rounds_used = round;
      result.final = cfg;
      return result;
    }
    step();
  }
  result.rounds_used = round;

  bool quiet = true;
  for (int v = 0; v < cfg.k(); ++v) {
    step();
    if (!result.trace.back().moves.empty()) quiet = false;
  }
  result.terminated = quiet && target_reached(cfg, inst);
  result.final = cfg;
  return result;
}

}  // namespace ringform
