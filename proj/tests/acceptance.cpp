// acceptance -- end-to-end criteria over generated instance families.
// Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ringform/analysis.hpp"
#include "ringform/core.hpp"
#include "ringform/engine.hpp"
#include "ringform/generators.hpp"
#include "ringform/verify.hpp"
#include "support/oracles.hpp"

using namespace ringform;

namespace {

struct Recorded {
  Instance inst;
  RunResult result;
};

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> failures;

  void fail(std::string why) {
    pass = false;
    if (failures.size() < 5) failures.push_back(std::move(why));
  }
};

std::vector<Recorded> two_colour_pool;  // C1-C3 plus odd-k extras, for C4
std::vector<Recorded> all_runs;         // everything, for C9

std::string label(const Instance& inst) { return inst.generator.empty() ? std::string("<hand-made>") : inst.generator; }

Recorded record(const Instance& inst, const EngineOptions& opts = {}) {
  Recorded r{inst, run(inst, opts)};
  all_runs.push_back(r);
  return r;
}

// C1: random two-colour P1, even k, rounds within ceil(2N_b/n_b^*) + k + 4.
Outcome c1() {
  Outcome o;
  int count = 0, within = 0;
  double worst = 0;
  std::uint64_t seed = 1000;
  for (int k = 2; k <= 16; k += 2)
    for (int p = 2; p <= 8; ++p)
      for (int s = 0; s < 10; ++s, ++seed) {
        const auto inst = gen_random(k, p, 2, seed);
        auto rec = record(inst);
        two_colour_pool.push_back(rec);
        ++count;
        const long long bound = testing::two_colour_bound(inst.initial.colours(), inst.spec.required, k);
        if (!rec.result.terminated) {
          o.fail(label(inst) + ": did not terminate");
          continue;
        }
        if (rec.result.rounds_used > bound) {
          o.fail(label(inst) + ": " + std::to_string(rec.result.rounds_used) + " rounds > bound " + std::to_string(bound));
          continue;
        }
        if (rec.result.bound.value != bound) o.fail(label(inst) + ": reported bound differs from the formula");
        ++within;
        worst = std::max(worst, static_cast<double>(rec.result.rounds_used) / static_cast<double>(bound));
      }
  if (count < 500) o.fail("only " + std::to_string(count) + " instances");
  char buf[160];
  std::snprintf(buf, sizeof buf, "%d/%d random even-k instances within bound, max rounds/bound %.3f", within, count, worst);
  o.summary = buf;
  return o;
}

// C2: homogeneous quotas finish within 3k + 4 rounds.
Outcome c2() {
  Outcome o;
  int count = 0, within = 0;
  for (int k : {4, 8, 16, 32})
    for (int p : {2, 3, 4, 6, 8}) {
      std::vector<int> ms = {1, p / 2, p - 1};
      std::sort(ms.begin(), ms.end());
      ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
      for (int m : ms)
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
          const auto inst = gen_homogeneous(k, p, m, seed * 7919 + static_cast<std::uint64_t>(k * 100 + p * 10 + m));
          auto rec = record(inst);
          two_colour_pool.push_back(rec);
          ++count;
          if (!rec.result.terminated)
            o.fail(label(inst) + ": did not terminate");
          else if (rec.result.rounds_used > 3LL * k + 4)
            o.fail(label(inst) + ": " + std::to_string(rec.result.rounds_used) + " rounds > 3k+4");
          else
            ++within;
        }
    }
  o.summary = std::to_string(within) + "/" + std::to_string(count) + " homogeneous instances within 3k+4";
  return o;
}

// C3: the adversarial half-split needs at least k/8 rounds.
Outcome c3() {
  Outcome o;
  int count = 0;
  std::string rows;
  for (int k : {8, 16, 32})
    for (int p : {2, 4}) {
      const auto inst = gen_adversarial_half(k, p);
      auto rec = record(inst);
      two_colour_pool.push_back(rec);
      ++count;
      if (!rec.result.terminated) {
        o.fail(label(inst) + ": did not terminate");
        continue;
      }
      if (8 * rec.result.rounds_used < k)
        o.fail(label(inst) + ": " + std::to_string(rec.result.rounds_used) + " rounds < k/8");
      if (rec.result.rounds_used > rec.result.bound.value)
        o.fail(label(inst) + ": " + std::to_string(rec.result.rounds_used) + " rounds > bound");
      rows += " k" + std::to_string(k) + "p" + std::to_string(p) + "=" + std::to_string(rec.result.rounds_used);
    }
  o.summary = std::to_string(count) + " adversarial runs, rounds:" + rows;
  return o;
}

// C4: lemma suite on every two-colour run, plus odd-k random runs.
Outcome c4() {
  Outcome o;
  std::uint64_t seed = 50000;
  for (int k = 3; k <= 15; k += 2)
    for (int p = 2; p <= 6; ++p)
      for (int s = 0; s < 5; ++s, ++seed) two_colour_pool.push_back(record(gen_random(k, p, 2, seed)));

  std::map<std::string, int> checked, failed;
  for (const auto& rec : two_colour_pool) {
    for (const auto& v : check_run(rec.inst, rec.result)) {
      ++checked[v.name];
      if (!v.pass) {
        ++failed[v.name];
        o.fail(label(rec.inst) + ": " + v.name + " round " + std::to_string(v.round) + ": " + v.detail);
      }
    }
  }
  for (const char* name : {"order_preserving", "suffix_property", "no_wraparound", "distance_monotone",
                           "distance_decrease", "cooperativeness", "recorded_distance"})
    if (checked[name] == 0) o.fail(std::string("checker never ran: ") + name);
  o.summary = std::to_string(two_colour_pool.size()) + " runs;";
  for (const auto& [name, n] : checked) o.summary += " " + name + " " + std::to_string(n - failed[name]) + "/" + std::to_string(n);
  return o;
}

// C5: distance() agrees with the slot oracle on reachable configurations.
Outcome c5() {
  Outcome o;
  Rng pick(77);
  int compared = 0;
  std::uint64_t seed = 90000;
  while (compared < 1000) {
    const int k = pick.uniform(2, 12), p = pick.uniform(1, 6);
    const bool p2 = pick.below(4) == 0;
    const auto inst = p2 ? gen_random_p2(k, p, 2, pick.uniform(0, p), seed++) : gen_random(k, p, 2, seed++);
    const auto result = run(inst);
    const auto ctx = make_context(inst);
    const auto configs = replay(inst.initial, result.trace);
    const auto& cfg = configs[pick.below(configs.size())];
    const long long fast = distance(cfg, *ctx.frame);
    const long long slow = oracle_distance(cfg, inst, ctx.frame->view.primary, ctx.frame->rename_offset);
    if (fast != slow) o.fail(label(inst) + ": distance " + std::to_string(fast) + " vs oracle " + std::to_string(slow));
    ++compared;
  }
  o.summary = std::to_string(compared) + " reachable configurations compared";
  return o;
}

// C6: q-colour P1 terminates within 4nk + 16 and agrees with the sequential phases.
Outcome c6() {
  Outcome o;
  int count = 0, agree = 0;
  std::uint64_t seed = 120000;
  for (int q : {3, 4, 5})
    for (int k = 2; k <= 10; ++k)
      for (int p = q - 1; p <= q + 3; p += 2)
        for (int s = 0; s < 5; ++s, ++seed) {
          const auto inst = gen_random(k, p, q, seed);
          auto rec = record(inst);
          ++count;
          const long long cap = 4LL * inst.initial.n() * k + 16;
          if (!rec.result.terminated || rec.result.rounds_used > cap) {
            o.fail(label(inst) + ": no termination within 4nk+16");
            continue;
          }
          const auto final_check = check_final(rec.result, inst);
          if (!final_check.pass) {
            o.fail(label(inst) + ": " + final_check.detail);
            continue;
          }
          const auto seq = testing::sequential_phase_counts(inst.initial.colours(), k, p, q, inst.spec.required, cap);
          if (seq.empty()) {
            o.fail(label(inst) + ": sequential oracle did not finish");
            continue;
          }
          bool same = true;
          for (int j = 1; j <= k; ++j) {
            const auto c = counts(rec.result.final, j, q);
            for (int col = 0; col < q; ++col) same = same && c[static_cast<std::size_t>(col)] == seq[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(col)];
          }
          if (!same)
            o.fail(label(inst) + ": block counts differ from the sequential oracle");
          else
            ++agree;
        }
  if (count < 200) o.fail("only " + std::to_string(count) + " instances");
  o.summary = std::to_string(agree) + "/" + std::to_string(count) + " q-colour instances terminate and match the sequential oracle";
  return o;
}

// C7: P3 runs end on the exact pattern string.
Outcome c7() {
  Outcome o;
  int count = 0, exact = 0;
  std::uint64_t seed = 150000;
  for (int q : {2, 3, 4})
    for (int k = 2; k <= 8; ++k)
      for (int p = q; p <= q + 2; ++p)
        for (int s = 0; s < 2; ++s, ++seed) {
          const auto inst = gen_p3_random(k, p, q, seed);
          auto rec = record(inst);
          ++count;
          std::vector<Colour> want;
          for (const auto& pat : inst.spec.patterns) want.insert(want.end(), pat.begin(), pat.end());
          if (!rec.result.terminated)
            o.fail(label(inst) + ": did not terminate");
          else if (rec.result.final.colours() != want)
            o.fail(label(inst) + ": final " + render(rec.result.final, q) + " != " + render(want, q));
          else
            ++exact;
        }
  if (count < 100) o.fail("only " + std::to_string(count) + " instances");
  o.summary = std::to_string(exact) + "/" + std::to_string(count) + " P3 instances reach the exact pattern";
  return o;
}

// C8: restricted P2 with surplus d in [0, p] meets every lower bound and
// keeps the d-shifted suffix property.
Outcome c8() {
  Outcome o;
  int count = 0, ok = 0;
  std::uint64_t seed = 180000;
  for (int q : {2, 3, 4})
    for (int k = 2; k <= 9; ++k)
      for (int p = 1; p <= 5; ++p)
        for (int d = 0; d <= p; d += (p > 2 ? 2 : 1)) {
          const auto inst = gen_random_p2(k, p, q, d, seed++);
          auto rec = record(inst);
          ++count;
          bool good = true;
          const long long cap = 4LL * inst.initial.n() * k + 16;
          if (!rec.result.terminated || rec.result.rounds_used > cap) {
            o.fail(label(inst) + ": no termination within 4nk+16");
            continue;
          }
          for (const auto& v : check_run(inst, rec.result))
            if (!v.pass) {
              good = false;
              o.fail(label(inst) + ": " + v.name + " round " + std::to_string(v.round) + ": " + v.detail);
            }
          ok += good;
        }
  if (count < 200) o.fail("only " + std::to_string(count) + " instances");
  o.summary = std::to_string(ok) + "/" + std::to_string(count) + " P2 instances meet lower bounds and the shifted suffix property";
  return o;
}

// C9: safety on every run recorded above.
Outcome c9() {
  Outcome o;
  int ok = 0;
  for (const auto& rec : all_runs) {
    const auto v = check_safety(rec.inst, rec.result);
    if (v.pass)
      ++ok;
    else
      o.fail(label(rec.inst) + ": round " + std::to_string(v.round) + ": " + v.detail);
  }
  o.summary = std::to_string(ok) + "/" + std::to_string(all_runs.size()) + " runs collision-free, local, conserving and quiescent";
  return o;
}

// C10: every checker rejects an injected fault.
Outcome c10() {
  Outcome o;
  int caught = 0, total = 0;
  auto expect_fail = [&](const std::string& what, const InvariantVerdict& v) {
    ++total;
    if (v.pass)
      o.fail(what + ": fault not detected");
    else
      ++caught;
  };

  // A run with plenty of movement to mutate.
  const auto inst = gen_adversarial_half(8, 2);
  const auto base = run(inst);
  const auto ctx = make_context(inst);
  const auto& frame = *ctx.frame;
  const auto configs = replay(inst.initial, base.trace);
  const long long d0 = *base.initial_distance;

  {  // order: exchange two blue agents that are not cyclic neighbours in id order
    auto mutated = configs;
    auto agents = std::vector<Agent>(mutated[1].agents().begin(), mutated[1].agents().end());
    std::vector<int> blues;
    for (int x = 0; x < static_cast<int>(agents.size()); ++x)
      if (agents[static_cast<std::size_t>(x)].colour == frame.view.primary) blues.push_back(x);
    std::swap(agents[static_cast<std::size_t>(blues[0])], agents[static_cast<std::size_t>(blues[1])]);
    mutated[1] = Configuration(inst.k(), inst.p(), agents);
    expect_fail("order_preserving", check_order_preserving(mutated, frame.view.primary));
  }
  {  // suffix: all blue agents at the far end of a two-block ring
    const auto bad = make_instance(Problem::P1, 2, 2, 2, "BBRR", {{1, 1}, {1, 1}});
    const auto view = project(bad);
    const std::vector<Configuration> seq{Configuration::from_colours(2, 2, parse_colours("RRBB", 2)),
                                         Configuration::from_colours(2, 2, parse_colours("BBRR", 2))};
    expect_fail("suffix_property", check_suffix_property(seq, view, 1));
  }
  {  // wraparound: a blue agent jumps from renamed S_1 to S_k
    const auto bad = make_instance(Problem::P1, 4, 1, 2, "BRRR", {{1, 0, 0, 0}, {0, 1, 1, 1}});
    const auto view = project(bad);
    const auto before = bad.initial;
    const auto after = Configuration::from_colours(4, 1, parse_colours("RRRB", 2));
    RoundTrace rt;
    rt.round = 1;
    rt.moves = {{0, 0, 3}, {3, 3, 0}};
    const std::vector<RoundTrace> trace{rt};
    const std::vector<Configuration> seq{before, apply_moves(before, rt.moves)};
    (void)after;
    expect_fail("no_wraparound", check_no_wraparound(trace, seq, view, 1));
  }
  {  // distance: d bumps up mid-run
    auto trace = base.trace;
    trace[1].distance = *trace[0].distance + 1;
    expect_fail("distance_monotone", check_distance_monotone(trace, d0));
    expect_fail("recorded_distance", check_recorded_distance(trace, configs, frame));
  }
  {  // decrease: d frozen for three rounds while positive
    auto trace = base.trace;
    for (int r = 0; r < 3; ++r) trace[static_cast<std::size_t>(r)].distance = d0;
    expect_fail("distance_decrease", check_distance_decrease(trace, d0, 2));
  }
  {  // final: two agents of different colour exchanged across blocks
    auto broken = base;
    std::vector<Agent> agents(broken.final.agents().begin(), broken.final.agents().end());
    int x = 0, y = inst.initial.n() - 1;
    while (agents[static_cast<std::size_t>(x)].colour != 1) ++x;
    while (agents[static_cast<std::size_t>(y)].colour != 2 || y / inst.p() == x / inst.p()) --y;
    std::swap(agents[static_cast<std::size_t>(x)], agents[static_cast<std::size_t>(y)]);
    broken.final = Configuration(inst.k(), inst.p(), agents);
    expect_fail("final", check_final(broken, inst));
  }
  {  // cooperativeness: freeze the ring just before some late move of a B_l agent
    const auto partition = blue_partition(static_cast<int>(frame.dest.size()), frame.view.cap);
    const auto ranking = blue_ranking(configs[0], frame.view, frame.rename_offset);
    std::size_t freeze = 0;
    for (std::size_t t = 1; t < configs.size() && freeze == 0; ++t)
      for (std::size_t idx = 0; idx < ranking.size(); ++idx) {
        const int cls = partition.class_of(static_cast<int>(idx) + 1);
        if (static_cast<int>(t) < 2 * cls + 2) continue;
        auto where = [&](const Configuration& c) {
          for (int x = 0; x < c.n(); ++x)
            if (c[x].id == ranking[idx]) return c.block_of(x);
          return 0;
        };
        if (where(configs[t]) != where(configs[t - 1])) {
          freeze = t;
          break;
        }
      }
    if (freeze == 0) {
      o.fail("cooperativeness: no late move to delay in the base run");
    } else {
      std::vector<Configuration> delayed(configs.begin(), configs.begin() + static_cast<std::ptrdiff_t>(freeze));
      delayed.push_back(configs[freeze - 1]);
      expect_fail("cooperativeness", check_cooperativeness(delayed, frame, partition));
    }
  }
  {  // safety: a move leaving its window, then a collision
    std::size_t busy = 0;
    while (base.trace[busy].moves.empty()) ++busy;
    auto broken = base;
    auto& moves = broken.trace[busy].moves;
    const auto& m = moves.front();
    moves.front() = {m.agent, m.from, (m.to + 3 * inst.p()) % inst.initial.n()};
    expect_fail("safety (locality)", check_safety(inst, broken));

    auto collide = base;
    collide.trace[busy].moves.push_back(collide.trace[busy].moves.front());
    expect_fail("safety (collision)", check_safety(inst, collide));

    auto noisy = base;
    noisy.trace.back().moves = base.trace[busy].moves;
    expect_fail("safety (quiescence)", check_safety(inst, noisy));
  }
  {  // window 1 is too short to see a decrease on some even-k run
    bool found = false;
    for (std::uint64_t seed = 0; seed < 400 && !found; ++seed) {
      const auto probe = gen_random(4 + 2 * static_cast<int>(seed % 4), 3, 2, 300000 + seed);
      const auto r = run(probe);
      found = !check_distance_decrease(r.trace, *r.initial_distance, 1).pass;
    }
    ++total;
    if (found)
      ++caught;
    else
      o.fail("distance_decrease with window 1 never failed");
  }
  o.summary = std::to_string(caught) + "/" + std::to_string(total) + " injected faults detected";
  return o;
}

}  // namespace

int main() {
  std::setvbuf(stdout, nullptr, _IOLBF, 0);
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"C1 random even-k bound", c1},          {"C2 homogeneous 3k+4", c2},
      {"C3 adversarial lower bound", c3},      {"C4 lemma suite", c4},
      {"C5 distance oracle", c5},              {"C6 q-colour termination", c6},
      {"C7 P3 exact pattern", c7},             {"C8 P2 lower bounds", c8},
      {"C9 safety", c9},                       {"C10 checker mutations", c10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = fn();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s (%.2fs)\n", out.pass ? "PASS" : "FAIL", name.c_str(), out.summary.c_str(), secs);
    for (const auto& f : out.failures) std::printf("       %s\n", f.c_str());
    failed += !out.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
