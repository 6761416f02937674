// cli.hpp -- subcommands behind the ringform executable.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ringform/generators.hpp"

namespace ringform::cli {

/// Stable exit statuses.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInstance = 2,
  kNonTermination = 3,
  kVerificationFailed = 4,
  kIoError = 5,
};

struct RunArgs {
  std::string instance_path;
  std::string trace_path;  // empty: no trace file
  long long max_rounds = -1;
  bool verify = false;
  bool q_colour_cap = false;
};

int cmd_gen(const GenSpec& spec, const std::string& out_path, std::ostream& out, std::ostream& err);
int cmd_run(const RunArgs& args, std::ostream& out, std::ostream& err);
int cmd_analyze(const std::string& instance_path, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& trace_path, std::ostream& out, std::ostream& err);

// ---------------------------------------------------------------------------
// Benchmarks

/// One generator family swept over parameter lists and a seed range.
struct SuiteFamily {
  GenKind kind = GenKind::Random;
  std::vector<int> k{4};
  std::vector<int> p{4};
  std::vector<int> q{2};
  std::vector<int> m{1};
  std::vector<int> extra{0};
  std::uint64_t seed_from = 0;
  std::uint64_t seed_to = 0;  // inclusive
};

/// Suite documents are JSON:
///   {"families": [{"kind": "homogeneous", "k": [4, 8], "p": [4], "m": [1, 2],
///                  "seeds": [0, 9]}, ...]}
/// The name "default" selects the built-in suite. Throws std::invalid_argument.
std::vector<SuiteFamily> parse_suite(const std::string& text);
std::vector<SuiteFamily> default_suite();

struct BenchRow {
  std::string id;
  std::string family;
  int k = 0, p = 0, q = 0;
  /// Oriented N_b and n_b^* for two-colour rows, colour 1 otherwise.
  int blue_total = 0;
  int cap = 0;
  bool terminated = false;
  long long rounds_used = 0;
  long long bound = 0;
  bool bound_tight = false;
  /// rounds_used <= bound
  bool bound_satisfied = false;
  /// Adversarial rows: k/8, the lower bound on any algorithm. 0 otherwise.
  double lower_bound = 0;
  bool lower_bound_satisfied = true;
};

struct BenchReport {
  std::vector<BenchRow> rows;  // sorted by id
  double max_ratio = 0;        // max rounds_used / bound over tight rows

  /// Every run terminated, every tight bound and lower bound holds.
  bool ok() const;
};

/// Runs every instance of the suite; `threads` <= 0 uses the hardware concurrency.
BenchReport bench(const std::vector<SuiteFamily>& suite, int threads = 0);

std::string report_json(const BenchReport& report);

int cmd_bench(const std::string& suite, const std::string& out_path, int threads, std::ostream& out,
              std::ostream& err);

}  // namespace ringform::cli
