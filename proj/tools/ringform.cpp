// ringform -- generate, run, analyze, verify and benchmark ring pattern formation.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ringform/cli.hpp"

int main(int argc, char** argv) {
  using namespace ringform;
  CLI::App app{"Distributed pattern formation on a ring of coloured agents"};
  app.require_subcommand(1);

  GenSpec gen;
  std::string gen_kind = "random", gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Write a generated instance document");
  gen_cmd->add_option("--kind", gen_kind, "random | p2_random | homogeneous | adversarial_half | p3_random");
  gen_cmd->add_option("--k", gen.k, "Number of blocks")->required();
  gen_cmd->add_option("--p", gen.p, "Block length")->required();
  gen_cmd->add_option("--q", gen.q, "Number of colours");
  gen_cmd->add_option("--m", gen.m, "Homogeneous blue requirement per block");
  gen_cmd->add_option("--extra", gen.extra, "Surplus colour-1 agents (p2_random)");
  gen_cmd->add_option("--seed", gen.seed, "Generator seed");
  gen_cmd->add_option("--out", gen_out, "Output path (default: stdout)");

  cli::RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "Run the algorithm on an instance");
  run_cmd->add_option("--instance", run_args.instance_path, "Instance document")->required();
  run_cmd->add_option("--trace", run_args.trace_path, "JSON-lines trace output ('-' for stdout)");
  run_cmd->add_option("--max-rounds", run_args.max_rounds, "Round budget (default 4nk+16)");
  run_cmd->add_flag("--verify", run_args.verify, "Run every applicable checker on the trace");
  run_cmd->add_flag("--q-colour-cap", run_args.q_colour_cap, "Cap q-colour transfers by min_j n_i(j)");

  std::string analyze_path;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report surpluses, renaming, distance and bound");
  analyze_cmd->add_option("--instance", analyze_path, "Instance document")->required();

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check a recorded trace");
  verify_cmd->add_option("--trace", verify_path, "JSON-lines trace")->required();

  std::string suite = "default", bench_out;
  int threads = 0;
  auto* bench_cmd = app.add_subcommand("bench", "Compare rounds used against the theoretical bounds");
  bench_cmd->add_option("--suite", suite, "Suite JSON file, or 'default'");
  bench_cmd->add_option("--out", bench_out, "Report JSON output path");
  bench_cmd->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kUsage;
  }

  if (*gen_cmd) {
    try {
      gen.kind = parse_gen_kind(gen_kind);
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << '\n';
      return cli::kUsage;
    }
    return cli::cmd_gen(gen, gen_out, std::cout, std::cerr);
  }
  if (*run_cmd) return cli::cmd_run(run_args, std::cout, std::cerr);
  if (*analyze_cmd) return cli::cmd_analyze(analyze_path, std::cout, std::cerr);
  if (*verify_cmd) return cli::cmd_verify(verify_path, std::cout, std::cerr);
  if (*bench_cmd) return cli::cmd_bench(suite, bench_out, threads, std::cout, std::cerr);
  return cli::kUsage;
}
