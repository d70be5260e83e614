#include <iostream>

#include "CLI11.hpp"
#include "tds/cli_commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"total dominating set toolkit for unit disk graphs"};
  app.require_subcommand(1);

  tds::cli::GenerateArgs gen;
  CLI::App* cgen = app.add_subcommand("generate", "sample a random instance");
  cgen->add_option("--n", gen.n, "point count")->required();
  cgen->add_option("--width", gen.width, "box width")->required();
  cgen->add_option("--height", gen.height, "box height")->required();
  cgen->add_option("--seed", gen.seed, "PRNG seed")->required();
  cgen->add_flag("--allow-isolated", gen.allow_isolated,
                 "keep isolated points instead of resampling them");
  cgen->add_option("-o,--out", gen.out, "output points file")->required();

  tds::cli::SolveArgs solve;
  CLI::App* csolve = app.add_subcommand("solve", "run a solver on an instance");
  csolve->add_option("instance", solve.instance, "points file")->required();
  csolve->add_option("--algo", solve.algo, "approx8 | ptas | exact")
      ->required();
  csolve->add_option("--k", solve.k, "ptas shifting parameter (default 1)");
  csolve->add_option("--max-nodes", solve.max_nodes,
                     "exact search node budget, 0 = unlimited");
  csolve->add_option("-o,--out", solve.out, "solution file to write");

  tds::cli::ValidateArgs val;
  CLI::App* cval = app.add_subcommand("validate", "check a solution file");
  cval->add_option("instance", val.instance, "points file")->required();
  cval->add_option("solution", val.solution, "solution file")->required();

  tds::cli::ReduceArgs red;
  CLI::App* cred = app.add_subcommand(
      "reduce", "build a TDS instance from an embedded planar graph");
  cred->add_option("embedding", red.embedding, "embedding file")->required();
  cred->add_option("-o,--out", red.out_points, "output points file")
      ->required();
  cred->add_option("--meta", red.out_meta,
                   "metadata sidecar (default: <out>.meta)");

  tds::cli::BenchArgs bench;
  CLI::App* cbench = app.add_subcommand(
      "bench", "benchmark solvers over a directory of instances");
  cbench->add_option("dir", bench.dir, "directory holding .pts files")
      ->required();
  cbench->add_option("--algo", bench.algos,
                     "algorithms to run (repeatable; default approx8)");
  cbench->add_option("--k", bench.ks, "ptas parameters (repeatable)");
  cbench->add_option("--max-nodes", bench.max_nodes,
                     "node budget for exact rows, 0 = unlimited");
  cbench->add_flag("--repro", bench.repro,
                   "write 0 in the millis column for byte-stable CSV");
  cbench->add_option("-o,--out", bench.out_csv, "output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (cgen->parsed()) return tds::cli::cmd_generate(gen);
  if (csolve->parsed()) return tds::cli::cmd_solve(solve);
  if (cval->parsed()) return tds::cli::cmd_validate(val);
  if (cred->parsed()) return tds::cli::cmd_reduce(red);
  if (cbench->parsed()) return tds::cli::cmd_bench(bench);
  std::cerr << "no subcommand\n";
  return 1;
}
