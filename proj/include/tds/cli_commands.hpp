#pragma once
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

namespace tds::cli {

// Exit codes are the tds::errors constants: 0 ok, 1 parse/I-O, 2 infeasible,
// 3 budget exceeded, 4 validation failed. Every command takes its streams so
// tests can run commands in-process.

struct GenerateArgs {
  int n = 0;
  double width = 1.0;
  double height = 1.0;
  std::uint64_t seed = 0;
  bool allow_isolated = false;
  std::string out;  // points file
};
int cmd_generate(const GenerateArgs& args, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);

struct SolveArgs {
  std::string instance;
  std::string algo = "approx8";  // approx8 | ptas | exact
  int k = 1;                     // ptas shifting parameter
  std::uint64_t max_nodes = 0;   // exact node budget, 0 = unlimited
  std::string out;               // solution file; empty = don't write
};
int cmd_solve(const SolveArgs& args, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);

struct ValidateArgs {
  std::string instance;
  std::string solution;
};
int cmd_validate(const ValidateArgs& args, std::ostream& out = std::cout,
                 std::ostream& err = std::cerr);

struct ReduceArgs {
  std::string embedding;
  std::string out_points;
  std::string out_meta;  // empty = out_points + ".meta"
};
int cmd_reduce(const ReduceArgs& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr);

struct BenchArgs {
  std::string dir;                  // scanned for *.pts, paths sorted
  std::vector<std::string> algos;   // deduped + sorted; default approx8
  std::vector<int> ks;              // ptas parameters; default {1}
  std::string out_csv;
  std::uint64_t max_nodes = 0;      // budget for exact rows
  bool repro = false;               // write 0 for millis: byte-stable CSV
};
int cmd_bench(const BenchArgs& args, std::ostream& out = std::cout,
              std::ostream& err = std::cerr);

}  // namespace tds::cli
