// cli.cpp

#include "ringform/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "ringform/analysis.hpp"
#include "ringform/engine.hpp"
#include "ringform/trace_io.hpp"
#include "ringform/verify.hpp"

namespace ringform::cli {

using nlohmann::json;

namespace {

bool read_file(const std::string& path, std::string& text, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return false;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) {
    err << "error: cannot write " << path << '\n';
    return false;
  }
  return true;
}

/// Loads and validates an instance; returns kOk or the exit code to report.
int load_instance(const std::string& path, Instance& inst, std::ostream& err) {
  std::string text;
  if (!read_file(path, text, err)) return kIoError;
  try {
    inst = parse_instance(text);
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << '\n';
    return kInvalidInstance;
  }
  return kOk;
}

void print_verdicts(const std::vector<InvariantVerdict>& verdicts, std::ostream& out) {
  for (const auto& v : verdicts) {
    out << (v.pass ? "PASS " : "FAIL ") << v.name;
    if (!v.pass) out << " round=" << v.round << ": " << v.detail;
    out << '\n';
  }
}

}  // namespace

int cmd_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err) {
  Instance inst;
  try {
    inst = generate(spec);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto text = serialize_instance(inst);
  if (out_path.empty() || out_path == "-") {
    out << text;
    return kOk;
  }
  return write_file(out_path, text, err) ? kOk : kIoError;
}

int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err) {
  Instance inst;
  if (int rc = load_instance(args.instance_path, inst, err); rc != kOk) return rc;
  const auto report = validate(inst);
  if (!report.valid) {
    err << "instance rejected: " << report.describe() << '\n';
    return kInvalidInstance;
  }

  EngineOptions opts;
  opts.max_rounds = args.max_rounds;
  opts.q_colour_cap = args.q_colour_cap;
  const RunResult result = run(inst, opts);

  if (!args.trace_path.empty()) {
    std::ostringstream trace;
    write_trace(trace, inst, opts, result);
    if (args.trace_path == "-") out << trace.str();
    else if (!write_file(args.trace_path, trace.str(), err)) return kIoError;
  }

  std::ostream& log = args.trace_path == "-" ? err : out;
  log << (result.terminated ? "terminated" : "not terminated") << " rounds_used=" << result.rounds_used
      << " bound=" << result.bound.value << (result.bound.tight ? "" : " (not tight)")
      << " final=" << render(result.final, inst.q) << '\n';

  if (!result.terminated) return kNonTermination;
  if (args.verify) {
    const auto verdicts = check_run(inst, result);
    print_verdicts(verdicts, log);
    if (std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return !v.pass; })) return kVerificationFailed;
  }
  return kOk;
}

int cmd_analyze(const std::string& instance_path, std::ostream& out, std::ostream& err) {
  Instance inst;
  if (int rc = load_instance(instance_path, inst, err); rc != kOk) return rc;
  const auto report = validate(inst);
  json doc = {{"kind", std::string(to_string(inst.spec.kind))},
              {"k", inst.k()},
              {"p", inst.p()},
              {"q", inst.q},
              {"valid", report.valid},
              {"problems", report.problems}};
  if (inst.spec.kind == Problem::P2Restricted) doc["extra"] = report.extra;
  if (report.valid) {
    const auto bound = theoretical_bound(inst);
    doc["bound"] = bound.value;
    doc["bound_tight"] = bound.tight;
    doc["strategy"] = strategy_for(inst) == Strategy::TwoColour ? "two_colour" : "q_colour";
    if (strategy_for(inst) == Strategy::TwoColour) {
      const auto view = engine_view(inst);
      const auto frame = make_frame(inst.initial, view);
      const auto profile = surplus_profile(inst.initial, view);
      doc["roles_reversed"] = view.primary != 1;
      doc["primary"] = view.primary;
      doc["blue_total"] = frame.dest.size();
      doc["cap"] = view.cap;
      doc["surplus_profile"] = profile.y;
      doc["rename_offset"] = frame.rename_offset;
      doc["dest"] = frame.dest;
      doc["distance"] = distance(inst.initial, frame);
    }
  }
  out << doc.dump(2) << '\n';
  return report.valid ? kOk : kInvalidInstance;
}

int cmd_verify(const std::string& trace_path, std::ostream& out, std::ostream& err) {
  std::string text;
  if (!read_file(trace_path, text, err)) return kIoError;
  TraceFile file;
  try {
    std::istringstream in(text);
    file = read_trace(in);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
  const auto verdicts = check_run(file.instance, file.result);
  print_verdicts(verdicts, out);
  const bool ok = std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; });
  return ok ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// Benchmarks

namespace {

std::vector<int> int_list(const json& fam, const char* key, std::vector<int> fallback) {
  if (!fam.contains(key)) return fallback;
  const auto& v = fam.at(key);
  if (v.is_number_integer()) return {v.get<int>()};
  return v.get<std::vector<int>>();
}

struct Job {
  std::string id;
  GenSpec spec;
};

BenchRow run_job(const Job& job) {
  BenchRow row;
  row.id = job.id;
  row.family = std::string(to_string(job.spec.kind));
  const Instance inst = generate(job.spec);
  row.k = inst.k();
  row.p = inst.p();
  row.q = inst.q;
  const auto view = strategy_for(inst) == Strategy::TwoColour ? engine_view(inst) : project(inst, 1);
  row.blue_total = totals(inst.initial, inst.q)[static_cast<std::size_t>(view.primary - 1)];
  row.cap = view.cap;
  const auto result = run(inst);
  row.terminated = result.terminated;
  row.rounds_used = result.rounds_used;
  row.bound = result.bound.value;
  row.bound_tight = result.bound.tight;
  row.bound_satisfied = result.rounds_used <= result.bound.value;
  if (job.spec.kind == GenKind::AdversarialHalf) {
    row.lower_bound = inst.k() / 8.0;
    row.lower_bound_satisfied = static_cast<double>(result.rounds_used) >= row.lower_bound;
  }
  return row;
}

std::string job_id(const GenSpec& s) {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s/k%03d/p%03d/q%02d/m%03d/d%03d/s%06llu", std::string(to_string(s.kind)).c_str(),
                s.k, s.p, s.q, s.m, s.extra, static_cast<unsigned long long>(s.seed));
  return buf;
}

}  // namespace

std::vector<SuiteFamily> default_suite() {
  std::vector<SuiteFamily> suite;
  suite.push_back({GenKind::Homogeneous, {4, 8, 16}, {4}, {2}, {1, 2, 3}, {0}, 0, 4});
  suite.push_back({GenKind::AdversarialHalf, {8, 16, 32}, {2, 4}, {2}, {1}, {0}, 0, 0});
  suite.push_back({GenKind::Random, {2, 4, 8, 16}, {2, 4, 8}, {2}, {1}, {0}, 0, 9});
  suite.push_back({GenKind::Random, {4, 6}, {4, 6}, {3, 4}, {1}, {0}, 0, 4});
  suite.push_back({GenKind::P3Random, {4, 5}, {4}, {2, 3}, {1}, {0}, 0, 4});
  suite.push_back({GenKind::RandomP2, {4, 6}, {4}, {2, 3}, {1}, {0, 2, 4}, 0, 4});
  return suite;
}

std::vector<SuiteFamily> parse_suite(const std::string& text) {
  if (text == "default") return default_suite();
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("suite is not valid JSON: ") + e.what());
  }
  if (!doc.contains("families") || !doc.at("families").is_array())
    throw std::invalid_argument("suite needs a 'families' array");
  std::vector<SuiteFamily> suite;
  for (const auto& fam : doc.at("families")) {
    try {
      SuiteFamily f;
      f.kind = parse_gen_kind(fam.at("kind").get<std::string>());
      f.k = int_list(fam, "k", f.k);
      f.p = int_list(fam, "p", f.p);
      f.q = int_list(fam, "q", f.q);
      f.m = int_list(fam, "m", f.m);
      f.extra = int_list(fam, "extra", f.extra);
      if (fam.contains("seeds")) {
        const auto seeds = fam.at("seeds").get<std::vector<std::uint64_t>>();
        if (seeds.size() != 2 || seeds[0] > seeds[1]) throw std::invalid_argument("'seeds' must be [from, to]");
        f.seed_from = seeds[0];
        f.seed_to = seeds[1];
      }
      suite.push_back(std::move(f));
    } catch (const json::exception& e) {
      throw std::invalid_argument(std::string("bad suite family: ") + e.what());
    }
  }
  return suite;
}

bool BenchReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) {
    return r.terminated && (!r.bound_tight || r.bound_satisfied) && r.lower_bound_satisfied;
  });
}

BenchReport bench(const std::vector<SuiteFamily>& suite, int threads) {
  std::vector<Job> jobs;
  for (const auto& f : suite)
    for (int k : f.k)
      for (int p : f.p)
        for (int q : f.q)
          for (int m : f.m)
            for (int extra : f.extra)
              for (std::uint64_t seed = f.seed_from; seed <= f.seed_to; ++seed) {
                GenSpec spec{f.kind, k, p, q, seed, m, extra};
                try {
                  (void)generate(spec);
                } catch (const std::invalid_argument&) {
                  continue;  // infeasible parameter combination
                }
                jobs.push_back({job_id(spec), spec});
              }
  std::sort(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.id < b.id; });
  jobs.erase(std::unique(jobs.begin(), jobs.end(), [](const Job& a, const Job& b) { return a.id == b.id; }), jobs.end());

  BenchReport report;
  report.rows.resize(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) report.rows[i] = run_job(jobs[i]);
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t count = std::min<std::size_t>(jobs.size(), threads > 0 ? static_cast<std::size_t>(threads) : hw);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (const auto& r : report.rows)
    if (r.bound_tight && r.bound > 0)
      report.max_ratio = std::max(report.max_ratio, static_cast<double>(r.rounds_used) / static_cast<double>(r.bound));
  return report;
}

std::string report_json(const BenchReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"id", r.id},
                    {"family", r.family},
                    {"k", r.k},
                    {"p", r.p},
                    {"q", r.q},
                    {"N_b", r.blue_total},
                    {"n_b_star", r.cap},
                    {"terminated", r.terminated},
                    {"rounds_used", r.rounds_used},
                    {"bound", r.bound},
                    {"bound_tight", r.bound_tight},
                    {"bound_satisfied", r.bound_satisfied},
                    {"lower_bound", r.lower_bound},
                    {"lower_bound_satisfied", r.lower_bound_satisfied}});
  json doc = {{"rows", rows}, {"max_ratio", report.max_ratio}, {"ok", report.ok()}};
  return doc.dump(2) + "\n";
}

int cmd_bench(const std::string& suite_arg, const std::string& out_path, int threads, std::ostream& out,
              std::ostream& err) {
  std::string text = suite_arg;
  if (suite_arg != "default" && !read_file(suite_arg, text, err)) return kIoError;
  std::vector<SuiteFamily> suite;
  try {
    suite = parse_suite(text);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  const auto report = bench(suite, threads);
  if (!out_path.empty() && !write_file(out_path, report_json(report), err)) return kIoError;

  std::size_t tight = 0, satisfied = 0, unterminated = 0;
  for (const auto& r : report.rows) {
    if (!r.terminated) ++unterminated;
    if (r.bound_tight) {
      ++tight;
      if (r.bound_satisfied) ++satisfied;
    }
  }
  out << report.rows.size() << " instances, " << unterminated << " not terminated, " << satisfied << "/" << tight
      << " within the two-colour bound, max rounds/bound = " << report.max_ratio << '\n';
  for (const auto& r : report.rows)
    if (!r.terminated || (r.bound_tight && !r.bound_satisfied) || !r.lower_bound_satisfied)
      out << "  violation: " << r.id << " rounds_used=" << r.rounds_used << " bound=" << r.bound << '\n';
  if (unterminated) return kNonTermination;
  return report.ok() ? kOk : kVerificationFailed;
}

}  // namespace ringform::cli
