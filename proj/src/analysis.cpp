// analysis.cpp

#include "ringform/analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ringform {

TwoColourView project(const Instance& inst, Colour primary) {
  if (primary < 1 || primary > inst.q) throw std::invalid_argument("primary colour out of range");
  TwoColourView view;
  view.primary = primary;
  view.quota = inst.spec.required[static_cast<std::size_t>(primary - 1)];
  view.cap = *std::min_element(view.quota.begin(), view.quota.end());
  const int present = totals(inst.initial, inst.q)[static_cast<std::size_t>(primary - 1)];
  view.surplus = present - std::accumulate(view.quota.begin(), view.quota.end(), 0);
  return view;
}

bool roles_reversed(const Instance& inst) {
  if (inst.q != 2) return false;
  const auto have = totals(inst.initial, 2);
  const long long blue_total = have[0], red_total = have[1];
  const long long blue_min = inst.spec.min_required(1), red_min = inst.spec.min_required(2);
  if (blue_min <= 0 && red_min <= 0) throw std::invalid_argument("cannot orient: both n_b* and n_r* are zero");
  if (red_min <= 0) return false;
  if (blue_min <= 0) return true;
  // N_b / n_b* > N_r / n_r*  <=>  N_b * n_r* > N_r * n_b*
  return blue_total * red_min > red_total * blue_min;
}

int SurplusProfile::total() const { return std::accumulate(y.begin(), y.end(), 0); }

SurplusProfile surplus_profile(const Configuration& cfg, const TwoColourView& view) {
  SurplusProfile profile;
  profile.y.reserve(static_cast<std::size_t>(cfg.k()));
  for (int j = 1; j <= cfg.k(); ++j) {
    auto block = cfg.block(j);
    const int blues = static_cast<int>(
        std::count_if(block.begin(), block.end(), [&](const Agent& a) { return view.is_blue(a); }));
    profile.y.push_back(blues - view.quota[static_cast<std::size_t>(j - 1)]);
  }
  return profile;
}

int cumulative_surplus(const SurplusProfile& profile, int start, int length) {
  const int k = profile.k();
  if (start < 1 || start > k || length < 1 || length > k)
    throw std::out_of_range("cumulative surplus needs start and length in [1, " + std::to_string(k) + "]");
  int sum = 0;
  for (int j = 0; j < length; ++j) sum += profile.y[static_cast<std::size_t>((start - 1 + j) % k)];
  return sum;
}

int max_cumulative_surplus(const SurplusProfile& profile, int start) {
  int best = cumulative_surplus(profile, start, 1);
  int sum = best;
  const int k = profile.k();
  for (int len = 2; len <= k; ++len) {
    sum += profile.y[static_cast<std::size_t>((start - 1 + len - 1) % k)];
    best = std::max(best, sum);
  }
  return best;
}

int rename_offset(const SurplusProfile& profile) {
  const int k = profile.k();
  int best_j = 1;
  int best = profile.y[0];
  int prefix = 0;
  for (int j = 1; j <= k; ++j) {
    prefix += profile.y[static_cast<std::size_t>(j - 1)];
    if (prefix > best) {
      best = prefix;
      best_j = j;
    }
  }
  return best_j % k + 1;
}

std::vector<int> renamed_quota(const TwoColourView& view, int offset) {
  const int k = view.k();
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  for (int r = 1; r <= k; ++r) out.push_back(view.quota[static_cast<std::size_t>(original_block(r, offset, k) - 1)]);
  return out;
}

std::vector<int> destinations(std::span<const int> quota, int blue_total, int surplus) {
  std::vector<int> dest;
  dest.reserve(static_cast<std::size_t>(std::max(blue_total, 0)));
  int block = 1;
  long long threshold = surplus + (quota.empty() ? 0 : quota[0]);
  for (int rank = 1; rank <= blue_total; ++rank) {
    while (threshold < rank) {
      if (block == static_cast<int>(quota.size()))
        throw std::invalid_argument("rank " + std::to_string(rank) + " exceeds the total requirement");
      threshold += quota[static_cast<std::size_t>(block)];
      ++block;
    }
    dest.push_back(block);
  }
  return dest;
}

std::vector<AgentId> blue_ranking(const Configuration& cfg, const TwoColourView& view, int rename_offset) {
  std::vector<AgentId> ids;
  const int n = cfg.n();
  const int origin = cfg.block_start(rename_offset);
  for (int step = 0; step < n; ++step) {
    const auto& a = cfg[(origin + step) % n];
    if (view.is_blue(a)) ids.push_back(a.id);
  }
  return ids;
}

DistanceReport distance(const Configuration& cfg, const TwoColourView& view, int rename_offset,
                        std::span<const int> dest) {
  DistanceReport report;
  report.rename_offset = rename_offset;
  report.dest.assign(dest.begin(), dest.end());
  const int n = cfg.n();
  const int k = cfg.k();
  const int origin = cfg.block_start(rename_offset);
  std::size_t rank = 0;
  for (int step = 0; step < n; ++step) {
    const int pos = (origin + step) % n;
    if (!view.is_blue(cfg[pos])) continue;
    if (rank >= dest.size()) throw std::invalid_argument("more blue agents than destinations");
    const int block = renamed_block(cfg.block_of(pos), rename_offset, k);
    const int disp = block - dest[rank];
    report.displacement.push_back(disp);
    report.d += disp;
    ++rank;
  }
  return report;
}

DistanceFrame make_frame(const Configuration& initial, const TwoColourView& view) {
  DistanceFrame frame;
  frame.view = view;
  frame.rename_offset = rename_offset(surplus_profile(initial, view));
  const auto quota = renamed_quota(view, frame.rename_offset);
  const int blue_total = static_cast<int>(std::count_if(initial.agents().begin(), initial.agents().end(),
                                                        [&](const Agent& a) { return view.is_blue(a); }));
  frame.dest = destinations(quota, blue_total, view.surplus);
  return frame;
}

BluePartition blue_partition(int blue_total, int cap) {
  if (cap <= 0) throw std::invalid_argument("blue partition needs n_b* > 0");
  BluePartition part;
  part.cap = cap;
  for (int rank = 1; rank <= blue_total; ++rank) {
    if ((rank - 1) % cap == 0) part.classes.emplace_back();
    part.classes.back().push_back(rank);
  }
  return part;
}

long long generic_round_cap(const Instance& inst) {
  return 4LL * inst.n() * inst.k() + 16;
}

Bound theoretical_bound(const Instance& inst) {
  if (inst.spec.kind != Problem::P1 || inst.q != 2) return {generic_round_cap(inst), false};
  const Colour primary = roles_reversed(inst) ? 2 : 1;
  const auto view = project(inst, primary);
  const long long blue_total = totals(inst.initial, 2)[static_cast<std::size_t>(primary - 1)];
  const long long cap = view.cap;
  const long long value = (2 * blue_total + cap - 1) / cap + inst.k() + 4;
  if (inst.k() % 2 == 0) return {value, true};
  return {3 * value, false};
}

}  // namespace ringform
