// verify.cpp

#include "ringform/verify.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ringform {

namespace {

InvariantVerdict passed(std::string name) { return {std::move(name), -1, true, ""}; }

InvariantVerdict failed(std::string name, int round, std::string detail) {
  return {std::move(name), round, false, std::move(detail)};
}

std::vector<AgentId> cyclic_ids(const Configuration& cfg, Colour colour) {
  std::vector<AgentId> ids;
  for (const auto& a : cfg.agents())
    if (a.colour == colour) ids.push_back(a.id);
  return ids;
}

std::vector<int> positions_by_id(const Configuration& cfg) {
  std::vector<int> where(static_cast<std::size_t>(cfg.n()), -1);
  for (int x = 0; x < cfg.n(); ++x) where[static_cast<std::size_t>(cfg[x].id)] = x;
  return where;
}

std::string join(const std::vector<AgentId>& ids) {
  std::ostringstream out;
  for (std::size_t i = 0; i < ids.size(); ++i) out << (i ? "," : "") << ids[i];
  return out.str();
}

}  // namespace

std::vector<Configuration> replay(const Configuration& initial, std::span<const RoundTrace> trace) {
  std::vector<Configuration> configs{initial};
  configs.reserve(trace.size() + 1);
  for (const auto& round : trace) configs.push_back(apply_moves(configs.back(), round.moves));
  return configs;
}

InvariantVerdict check_order_preserving(std::span<const Configuration> configs, Colour primary) {
  const std::string name = "order_preserving";
  if (configs.empty()) return passed(name);
  auto before = cyclic_ids(configs[0], primary);
  for (std::size_t r = 1; r < configs.size(); ++r) {
    auto after = cyclic_ids(configs[r], primary);
    bool same = after.size() == before.size();
    if (same && !before.empty()) {
      auto it = std::find(after.begin(), after.end(), before.front());
      same = it != after.end();
      if (same) {
        std::rotate(after.begin(), it, after.end());
        same = after == before;
      }
    }
    if (!same)
      return failed(name, static_cast<int>(r),
                    "cyclic order of colour-" + std::to_string(primary) + " ids changed from (" + join(before) +
                        ") to (" + join(cyclic_ids(configs[r], primary)) + ")");
    before = cyclic_ids(configs[r], primary);
  }
  return passed(name);
}

InvariantVerdict check_suffix_property(std::span<const Configuration> configs, const TwoColourView& view,
                                       int rename_offset) {
  const std::string name = "suffix_property";
  for (std::size_t r = 0; r < configs.size(); ++r) {
    const auto profile = surplus_profile(configs[r], view);
    const int k = profile.k();
    const int total = profile.total();
    int prefix = 0;
    for (int j = 1; j < k; ++j) {
      prefix += profile.y[static_cast<std::size_t>(original_block(j, rename_offset, k) - 1)];
      const int suffix = total - prefix;
      if (prefix > view.surplus || suffix < 0)
        return failed(name, static_cast<int>(r),
                      "renamed j=" + std::to_string(j) + ": prefix y(C,1,j)=" + std::to_string(prefix) +
                          " (limit " + std::to_string(view.surplus) + "), suffix y(C,j+1,k-j)=" +
                          std::to_string(suffix));
    }
  }
  return passed(name);
}

InvariantVerdict check_no_wraparound(std::span<const RoundTrace> trace, std::span<const Configuration> configs,
                                     const TwoColourView& view, int rename_offset) {
  const std::string name = "no_wraparound";
  for (std::size_t r = 0; r < trace.size() && r < configs.size(); ++r) {
    const auto& before = configs[r];
    const int k = before.k();
    for (const auto& m : trace[r].moves) {
      const int from = renamed_block(before.block_of(m.from), rename_offset, k);
      const int to = renamed_block(before.block_of(m.to), rename_offset, k);
      const bool blue = view.is_blue(before[m.from]);
      if ((blue && from == 1 && to == k) || (!blue && from == k && to == 1))
        return failed(name, trace[r].round,
                      std::string(blue ? "blue" : "red") + " agent " + std::to_string(m.agent) +
                          " crosses the renamed S_k|S_1 boundary (position " + std::to_string(m.from) + " -> " +
                          std::to_string(m.to) + ")");
    }
  }
  return passed(name);
}

InvariantVerdict check_distance_monotone(std::span<const RoundTrace> trace, long long initial_distance) {
  const std::string name = "distance_monotone";
  long long prev = initial_distance;
  if (prev < 0) return failed(name, 0, "initial d = " + std::to_string(prev));
  for (const auto& round : trace) {
    if (!round.distance) return failed(name, round.round, "no distance recorded");
    const long long d = *round.distance;
    if (d < 0) return failed(name, round.round, "d = " + std::to_string(d) + " < 0");
    if (d > prev)
      return failed(name, round.round, "d increased from " + std::to_string(prev) + " to " + std::to_string(d));
    if (prev == 0 && !round.moves.empty())
      return failed(name, round.round, std::to_string(round.moves.size()) + " moves after d reached 0");
    prev = d;
  }
  return passed(name);
}

InvariantVerdict check_distance_decrease(std::span<const RoundTrace> trace, long long initial_distance, int window) {
  const std::string name = "distance_decrease";
  std::vector<long long> d{initial_distance};
  for (const auto& round : trace) {
    if (!round.distance) return failed(name, round.round, "no distance recorded");
    d.push_back(*round.distance);
  }
  const std::size_t last = d.size() - 1;
  for (std::size_t r = 0; r < d.size(); ++r) {
    if (d[r] <= 0) continue;
    const std::size_t ahead = r + static_cast<std::size_t>(window);
    if (ahead > last) break;
    if (d[ahead] > d[r] - 1)
      return failed(name, static_cast<int>(r),
                    "d = " + std::to_string(d[r]) + " after round " + std::to_string(r) + " but still " +
                        std::to_string(d[ahead]) + " after round " + std::to_string(ahead));
  }
  return passed(name);
}

InvariantVerdict check_final(const RunResult& result, const Instance& inst) {
  const std::string name = "final";
  if (!result.terminated) return failed(name, static_cast<int>(result.rounds_used), "run did not terminate");
  const auto& cfg = result.final;
  const auto& spec = inst.spec;
  for (int j = 1; j <= cfg.k(); ++j) {
    const auto have = counts(cfg, j, inst.q);
    switch (spec.kind) {
      case Problem::P1:
        for (int c = 1; c <= inst.q; ++c)
          if (have[static_cast<std::size_t>(c - 1)] != spec(c, j))
            return failed(name, static_cast<int>(result.rounds_used),
                          "block " + std::to_string(j) + " colour " + std::to_string(c) + ": " +
                              std::to_string(have[static_cast<std::size_t>(c - 1)]) + " != " +
                              std::to_string(spec(c, j)));
        break;
      case Problem::P2Restricted:
        if (have[0] < spec(1, j))
          return failed(name, static_cast<int>(result.rounds_used),
                        "block " + std::to_string(j) + ": " + std::to_string(have[0]) + " colour-1 agents < " +
                            std::to_string(spec(1, j)));
        break;
      case Problem::P3: break;
    }
  }
  if (spec.kind == Problem::P3) {
    std::string want;
    for (const auto& pat : spec.patterns) want += render(pat, inst.q);
    const auto got = render(cfg, inst.q);
    if (got != want) return failed(name, static_cast<int>(result.rounds_used), "final " + got + " != " + want);
  }
  return passed(name);
}

long long oracle_distance(const Configuration& cfg, const Instance& inst, Colour primary, int rename_offset) {
  const int k = cfg.k();
  const int p = cfg.p();
  const int n = k * p;
  const auto& row = inst.spec.required[static_cast<std::size_t>(primary - 1)];

  // Renamed block of every primary agent, in ring order from renamed S_1.
  std::vector<int> found;
  for (int step = 0; step < n; ++step) {
    const int pos = ((rename_offset - 1) * p + step) % n;
    if (cfg[pos].colour == primary) found.push_back(step / p + 1);
  }

  // One slot per required agent, surplus slots first in S_1.
  const int required = std::accumulate(row.begin(), row.end(), 0);
  std::vector<int> slots(static_cast<std::size_t>(std::max(0, static_cast<int>(found.size()) - required)), 1);
  for (int r = 1; r <= k; ++r) {
    const int original = (rename_offset + r - 2) % k;
    slots.insert(slots.end(), static_cast<std::size_t>(row[static_cast<std::size_t>(original)]), r);
  }

  long long d = 0;
  for (std::size_t i = 0; i < found.size() && i < slots.size(); ++i) d += found[i] - slots[i];
  return d;
}

InvariantVerdict check_cooperativeness(std::span<const Configuration> configs, const DistanceFrame& frame,
                                       const BluePartition& partition) {
  const std::string name = "cooperativeness";
  if (configs.empty()) return passed(name);
  const int k = configs[0].k();
  const auto ranking = blue_ranking(configs[0], frame.view, frame.rename_offset);
  std::vector<int> before = positions_by_id(configs[0]);
  for (std::size_t t = 1; t < configs.size(); ++t) {
    const auto after = positions_by_id(configs[t]);
    for (std::size_t idx = 0; idx < ranking.size(); ++idx) {
      const int rank = static_cast<int>(idx) + 1;
      const int cls = partition.class_of(rank);
      if (static_cast<int>(t) < 2 * cls + 2) continue;
      const AgentId id = ranking[idx];
      const int from = renamed_block(configs[t - 1].block_of(before[static_cast<std::size_t>(id)]), frame.rename_offset, k);
      const int to = renamed_block(configs[t].block_of(after[static_cast<std::size_t>(id)]), frame.rename_offset, k);
      const int dest = frame.dest[idx];
      if (from != dest && to != from - 1)
        return failed(name, static_cast<int>(t),
                      "agent " + std::to_string(id) + " (rank " + std::to_string(rank) + ", B_" + std::to_string(cls) +
                          ") stayed in renamed S_" + std::to_string(from) + "->S_" + std::to_string(to) +
                          ", destination S_" + std::to_string(dest));
    }
    before = after;
  }
  return passed(name);
}

InvariantVerdict check_safety(const Instance& inst, const RunResult& result) {
  const std::string name = "safety";
  const int k = inst.k();
  Configuration cfg = inst.initial;
  const auto start_totals = totals(cfg, inst.q);
  int expected_offset = 1;
  for (std::size_t r = 0; r < result.trace.size(); ++r) {
    const auto& round = result.trace[r];
    const int index = static_cast<int>(r) + 1;
    if (round.offset != expected_offset)
      return failed(name, index, "offset " + std::to_string(round.offset) + ", expected " + std::to_string(expected_offset));
    const auto pairing = pair_windows(k, round.offset);
    std::vector<int> partner(static_cast<std::size_t>(k + 1), 0);
    for (const auto& [l, rb] : pairing.pairs) {
      partner[static_cast<std::size_t>(l)] = rb;
      partner[static_cast<std::size_t>(rb)] = l;
    }
    for (const auto& m : round.moves) {
      if (m.from < 0 || m.from >= cfg.n() || m.to < 0 || m.to >= cfg.n())
        return failed(name, index, "agent " + std::to_string(m.agent) + " moves off the ring");
      const int from = cfg.block_of(m.from), to = cfg.block_of(m.to);
      if (partner[static_cast<std::size_t>(from)] == 0 || (to != from && to != partner[static_cast<std::size_t>(from)]))
        return failed(name, index,
                      "agent " + std::to_string(m.agent) + " leaves its window: S_" + std::to_string(from) + " -> S_" +
                          std::to_string(to));
    }
    try {
      cfg = apply_moves(cfg, round.moves);
    } catch (const CollisionError& e) {
      return failed(name, index, std::string("collision: ") + e.what());
    }
    if (totals(cfg, inst.q) != start_totals) return failed(name, index, "colour totals changed");
    for (int j = 1; j <= k; ++j)
      if (!round.counts.empty() && round.counts[static_cast<std::size_t>(j - 1)] != counts(cfg, j, inst.q))
        return failed(name, index, "recorded counts of block " + std::to_string(j) + " disagree with the moves");
    if (!round.violations.empty()) return failed(name, index, round.violations.front());
    if (static_cast<long long>(index) > result.rounds_used && !round.moves.empty())
      return failed(name, index, std::to_string(round.moves.size()) + " moves after the target condition held");
    expected_offset = next_offset(expected_offset, k);
  }
  if (result.terminated) {
    const long long silent = static_cast<long long>(result.trace.size()) - result.rounds_used;
    if (silent < k)
      return failed(name, static_cast<int>(result.trace.size()),
                    "only " + std::to_string(silent) + " verification rounds after termination");
    if (!target_reached(cfg, inst)) return failed(name, static_cast<int>(result.trace.size()), "target lost");
    if (!(cfg == result.final)) return failed(name, static_cast<int>(result.trace.size()), "final configuration mismatch");
  }
  return passed(name);
}

InvariantVerdict check_recorded_distance(std::span<const RoundTrace> trace, std::span<const Configuration> configs,
                                         const DistanceFrame& frame) {
  const std::string name = "recorded_distance";
  for (std::size_t r = 0; r < trace.size() && r + 1 < configs.size(); ++r) {
    const long long actual = distance(configs[r + 1], frame);
    if (!trace[r].distance || *trace[r].distance != actual)
      return failed(name, trace[r].round,
                    "recorded d " + (trace[r].distance ? std::to_string(*trace[r].distance) : std::string("null")) +
                        " != recomputed " + std::to_string(actual));
  }
  return passed(name);
}

std::vector<InvariantVerdict> check_run(const Instance& inst, const RunResult& result) {
  std::vector<InvariantVerdict> out;
  out.push_back(check_safety(inst, result));
  out.push_back(check_final(result, inst));
  if (!out.front().pass || strategy_for(inst) != Strategy::TwoColour) return out;

  const auto ctx = make_context(inst);
  const auto& frame = *ctx.frame;
  const auto configs = replay(inst.initial, result.trace);
  const long long d0 = result.initial_distance.value_or(distance(inst.initial, frame));

  out.push_back(check_order_preserving(configs, frame.view.primary));
  out.push_back(check_suffix_property(configs, frame.view, frame.rename_offset));
  out.push_back(check_no_wraparound(result.trace, configs, frame.view, frame.rename_offset));
  out.push_back(check_recorded_distance(result.trace, configs, frame));
  out.push_back(check_distance_monotone(result.trace, d0));
  if (inst.spec.kind == Problem::P1) {
    out.push_back(check_distance_decrease(result.trace, d0, inst.k() % 2 == 0 ? 2 : 3));
    if (inst.k() % 2 == 0) {
      const int blue_total = static_cast<int>(frame.dest.size());
      out.push_back(check_cooperativeness(configs, frame, blue_partition(blue_total, frame.view.cap)));
    }
  }
  return out;
}

}  // namespace ringform
