#include "tds/cli_commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tds/approx8.hpp"
#include "tds/core.hpp"
#include "tds/errors.hpp"
#include "tds/exact.hpp"
#include "tds/generators.hpp"
#include "tds/geometry.hpp"
#include "tds/ptas.hpp"
#include "tds/reduction.hpp"

namespace tds::cli {

namespace {

double steady_ms() {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string fmt_millis(double ms) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", ms);
  return buf;
}

// Maps the error taxonomy onto the documented exit codes.
template <typename F>
int run_guarded(std::ostream& err, F&& fn) {
  try {
    return fn();
  } catch (const infeasible_error& e) {
    err << "error: " << e.what();
    if (!e.ids.empty()) {
      err << " ids:";
      for (int id : e.ids) err << " " << id;
    }
    err << "\n";
    return kExitInfeasible;
  } catch (const budget_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

void check_algo(const std::string& algo) {
  if (algo != "approx8" && algo != "ptas" && algo != "exact") {
    throw input_error("unknown algo '" + algo +
                      "' (expected approx8, ptas, or exact)");
  }
}

}  // namespace

int cmd_generate(const GenerateArgs& args, std::ostream& out,
                 std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    if (args.out.empty()) throw input_error("generate needs an output path");
    GenSpec spec;
    spec.n = args.n;
    spec.width = args.width;
    spec.height = args.height;
    spec.seed = args.seed;
    spec.policy = args.allow_isolated ? MinDegreePolicy::allow
                                      : MinDegreePolicy::reject_isolated;
    const PointSet ps = gen_uniform(spec);
    std::ostringstream head;
    head << "uniform n=" << spec.n << " box=" << format_double(spec.width)
         << "x" << format_double(spec.height) << " seed=" << spec.seed
         << " policy="
         << (args.allow_isolated ? "allow" : "reject-isolated");
    save_points(ps, args.out, head.str());
    out << "generated " << args.out << " n=" << ps.size()
        << " seed=" << spec.seed << "\n";
    return kExitOk;
  });
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    check_algo(args.algo);
    const PointSet ps = load_points(args.instance);
    const double t0 = steady_ms();
    const GridIndex idx = build_index(ps);
    Solution sol;
    std::uint64_t nodes = 0;
    if (args.algo == "approx8") {
      sol = approx8::solve(ps, idx).T;
    } else if (args.algo == "ptas") {
      const ptas::PtasResult res = ptas::solve(ps, idx, {args.k});
      for (const auto& it : res.iterations) {
        out << "iteration i=" << it.i << " j=" << it.j
            << " size=" << it.sol.size() << "\n";
      }
      out << "winner i=" << res.best_i << " j=" << res.best_j << "\n";
      sol = res.best;
    } else {
      std::optional<int> hint;
      if (!ps.empty()) hint = approx8::solve(ps, idx).T.size();
      const exact::ExactResult res =
          exact::exact_tds(ps, idx, hint, {args.max_nodes});
      nodes = res.nodes_explored;
      sol = res.opt;
    }
    const double ms = steady_ms() - t0;
    if (!is_tds(ps, idx, sol)) {
      err << "error: solver produced an invalid solution\n";
      return kExitInvalid;
    }
    if (!args.out.empty()) save_solution(sol, args.out);
    out << "instance=" << args.instance << " algo=" << args.algo;
    if (args.algo == "ptas") out << " k=" << args.k;
    if (args.algo == "exact") out << " nodes=" << nodes;
    out << " n=" << ps.size() << " size=" << sol.size()
        << " millis=" << fmt_millis(ms) << " valid=1\n";
    return kExitOk;
  });
}

int cmd_validate(const ValidateArgs& args, std::ostream& out,
                 std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    const PointSet ps = load_points(args.instance);
    const GridIndex idx = build_index(ps);
    const Solution sol = load_solution(args.solution);
    const std::vector<int> und = undominated_total(ps, idx, sol);
    const bool size_ok = ps.empty() || sol.size() >= 2;
    if (und.empty() && size_ok) {
      out << "valid: " << sol.size() << " points totally dominate "
          << ps.size() << "\n";
      return kExitOk;
    }
    if (!size_ok) {
      out << "invalid: a nonempty instance needs a solution of >= 2 points\n";
    }
    if (!und.empty()) {
      out << "invalid: undominated ids:";
      for (int id : und) out << " " << id;
      out << "\n";
    }
    return kExitInvalid;
  });
}

int cmd_reduce(const ReduceArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    if (args.out_points.empty()) {
      throw input_error("reduce needs an output points path");
    }
    const reduction::EmbeddedPlanarGraph epg =
        reduction::load_embedding(args.embedding);
    const reduction::ReducedInstance ri = reduction::build(epg);
    const std::string meta =
        args.out_meta.empty() ? args.out_points + ".meta" : args.out_meta;
    reduction::save_instance(ri, args.out_points, meta);
    out << "n=" << ri.n << " m=" << ri.m << " ell=" << ri.ell
        << " points=" << ri.points.size() << "\n";
    out << "wrote " << args.out_points << " and " << meta << "\n";
    return kExitOk;
  });
}

int cmd_bench(const BenchArgs& args, std::ostream& out, std::ostream& err) {
  return run_guarded(err, [&]() -> int {
    namespace fs = std::filesystem;
    if (args.out_csv.empty()) throw input_error("bench needs an output CSV path");
    if (args.dir.empty() || !fs::is_directory(args.dir)) {
      throw input_error("bench needs an instance directory: " + args.dir);
    }
    std::vector<std::string> paths;
    for (const auto& entry : fs::directory_iterator(args.dir)) {
      if (entry.is_regular_file() && entry.path().extension() == ".pts") {
        paths.push_back(entry.path().string());
      }
    }
    std::sort(paths.begin(), paths.end());
    if (paths.empty()) throw input_error("no .pts instances in " + args.dir);

    std::vector<std::string> algos =
        args.algos.empty() ? std::vector<std::string>{"approx8"} : args.algos;
    std::sort(algos.begin(), algos.end());
    algos.erase(std::unique(algos.begin(), algos.end()), algos.end());
    for (const std::string& a : algos) check_algo(a);
    std::vector<int> ks = args.ks.empty() ? std::vector<int>{1} : args.ks;
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks) {
      if (k < 1) throw input_error("ptas k must be >= 1");
    }

    // Parse everything first; solver timing must not include I/O.
    std::vector<PointSet> instances(paths.size());
    std::vector<std::optional<std::uint64_t>> seeds(paths.size());
    for (size_t i = 0; i < paths.size(); ++i) {
      const double t0 = steady_ms();
      instances[i] = load_points(paths[i]);
      const double ms = steady_ms() - t0;
      seeds[i] = points_file_seed(paths[i]);
      out << "parsed " << paths[i] << " n=" << instances[i].size()
          << " millis=" << fmt_millis(ms) << "\n";
    }

    struct Task {
      int inst = 0;
      std::string algo;
      int k = 0;  // 0 = column left blank
    };
    std::vector<Task> tasks;
    for (size_t i = 0; i < paths.size(); ++i) {
      for (const std::string& a : algos) {
        if (a == "ptas") {
          for (int k : ks) tasks.push_back({static_cast<int>(i), a, k});
        } else {
          tasks.push_back({static_cast<int>(i), a, 0});
        }
      }
    }

    struct Row {
      int size = 0;
      double ms = 0.0;
      bool valid = false;
    };
    const int ntasks = static_cast<int>(tasks.size());
    std::vector<Row> rows(tasks.size());
    std::vector<std::exception_ptr> errs(tasks.size());
#pragma omp parallel for schedule(dynamic)
    for (int t = 0; t < ntasks; ++t) {
      try {
        const Task& task = tasks[t];
        const PointSet& ps = instances[static_cast<size_t>(task.inst)];
        const double t0 = steady_ms();
        const GridIndex idx = build_index(ps);
        Solution sol;
        if (task.algo == "approx8") {
          sol = approx8::solve(ps, idx).T;
        } else if (task.algo == "ptas") {
          // cells already run inside a parallel region; keep them serial
          sol = ptas::solve_serial(ps, idx, {task.k}).best;
        } else {
          std::optional<int> hint;
          if (!ps.empty()) hint = approx8::solve(ps, idx).T.size();
          sol = exact::exact_tds(ps, idx, hint, {args.max_nodes}).opt;
        }
        rows[t].ms = steady_ms() - t0;
        rows[t].size = sol.size();
        rows[t].valid = is_tds(ps, idx, sol);
      } catch (...) {
        errs[t] = std::current_exception();
      }
    }
    for (int t = 0; t < ntasks; ++t) {
      if (errs[t]) std::rethrow_exception(errs[t]);
    }

    bool all_valid = true;
    for (int t = 0; t < ntasks; ++t) {
      if (!rows[t].valid) {
        err << "invalid solver output: " << paths[static_cast<size_t>(tasks[t].inst)]
            << " algo=" << tasks[t].algo;
        if (tasks[t].k > 0) err << " k=" << tasks[t].k;
        err << "\n";
        all_valid = false;
      }
    }
    if (!all_valid) return kExitInvalid;

    std::ofstream csv(args.out_csv);
    if (!csv) throw input_error("cannot write CSV: " + args.out_csv);
    csv << "instance,n,algo,k,size,millis,seed,valid\n";
    for (int t = 0; t < ntasks; ++t) {
      const Task& task = tasks[t];
      csv << paths[static_cast<size_t>(task.inst)] << ","
          << instances[static_cast<size_t>(task.inst)].size() << ","
          << task.algo << ",";
      if (task.k > 0) csv << task.k;
      csv << "," << rows[t].size << ","
          << (args.repro ? std::string("0") : fmt_millis(rows[t].ms)) << ",";
      if (seeds[static_cast<size_t>(task.inst)]) {
        csv << *seeds[static_cast<size_t>(task.inst)];
      }
      csv << ",1\n";
    }
    if (!csv) throw input_error("write failed: " + args.out_csv);
    out << "wrote " << args.out_csv << " rows=" << ntasks << "\n";
    return kExitOk;
  });
}

}  // namespace tds::cli
