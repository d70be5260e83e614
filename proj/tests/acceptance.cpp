// Acceptance gate: ten stated criteria, one PASS/FAIL line each, nonzero
// exit when any line fails. Oracles are the subset-enumeration and
// branch-and-bound exact solvers plus hand-built embeddings.
#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tds/approx8.hpp"
#include "tds/cli_commands.hpp"
#include "tds/core.hpp"
#include "tds/errors.hpp"
#include "tds/exact.hpp"
#include "tds/generators.hpp"
#include "tds/geometry.hpp"
#include "tds/ptas.hpp"
#include "tds/reduction.hpp"

using namespace tds;
namespace fs = std::filesystem;
using clk = std::chrono::steady_clock;

namespace {

int g_failures = 0;
std::array<std::string, 11> g_lines;

// Buffered so criteria can run out of order (timing first, on a quiet
// heap) while the report still prints 1..10.
void report(int crit, const std::string& name, bool pass,
            const std::string& detail) {
  char line[512];
  std::snprintf(line, sizeof line, "criterion %2d %-28s %s%s%s", crit,
                name.c_str(), pass ? "PASS" : "FAIL",
                detail.empty() ? "" : " — ", detail.c_str());
  g_lines[static_cast<size_t>(crit)] = line;
  if (!pass) ++g_failures;
}

double ms_since(clk::time_point t0) {
  return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

std::string data_path(const std::string& name) {
  return std::string(TDS_DATA_DIR) + "/" + name;
}

fs::path scratch_dir() {
  auto dir = fs::temp_directory_path() / "tds_acceptance";
  fs::create_directories(dir);
  return dir;
}

std::string slurp(const std::string& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::vector<std::pair<int, int>> source_edges(
    const reduction::ReducedInstance& ri) {
  std::map<int, int> vertex_of;
  for (int v = 0; v < ri.n; ++v)
    vertex_of[ri.vertex_map[static_cast<size_t>(v)]] = v;
  std::vector<std::pair<int, int>> es;
  for (const auto& seq : ri.edge_points)
    es.emplace_back(vertex_of.at(seq.front()), vertex_of.at(seq.back()));
  return es;
}

// Shared across criteria 1, 2 and 5.
struct Phase1Audit {
  long long checked = 0;
  long long failures = 0;

  void take(const PointSet& ps, const GridIndex& idx,
            const approx8::ApproxResult& res) {
    ++checked;
    bool ok = is_ds(ps, idx, res.D) && res.T.size() <= 2 * res.D.size();
    for (size_t a = 0; ok && a < res.D.ids.size(); ++a) {
      for (size_t b = a + 1; ok && b < res.D.ids.size(); ++b) {
        ok = !is_adjacent(ps[res.D.ids[a]], ps[res.D.ids[b]]);
      }
    }
    if (!ok) ++failures;
  }
};

Phase1Audit g_phase1;

void criterion1_validity() {
  const auto t_suite = clk::now();
  int bad = 0;
  double worst_approx_ms = 0.0;
  for (int s = 0; s < 500; ++s) {
    GenSpec spec{.n = 200, .width = 20, .height = 20,
                 .seed = 100000ull + static_cast<std::uint64_t>(s),
                 .policy = MinDegreePolicy::reject_isolated};
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);

    const auto t0 = clk::now();
    auto a8 = approx8::solve(ps, idx);
    worst_approx_ms = std::max(worst_approx_ms, ms_since(t0));
    g_phase1.take(ps, idx, a8);
    if (!is_tds(ps, idx, a8.T)) ++bad;

    for (int k = 1; k <= 2; ++k) {
      auto pt = ptas::solve(ps, idx, {.k = k});
      if (!is_tds(ps, idx, pt.best)) ++bad;
    }
  }
  const double total_s = ms_since(t_suite) / 1000.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "500 instances x {approx8, ptas k=1, ptas k=2}, %d invalid; "
                "worst approx8 %.2f ms (<100), suite %.1f s (<300)",
                bad, worst_approx_ms, total_s);
  report(1, "validity suite", bad == 0 && worst_approx_ms < 100.0 &&
                                   total_s < 300.0,
         detail);
}

void criterion2_factor8() {
  int violations = 0;
  double max_ratio = 0.0;
  for (int s = 0; s < 200; ++s) {
    const int n = 6 + s % 9;  // 6..14
    GenSpec spec{.n = n, .width = 3.5, .height = 3.5,
                 .seed = 200000ull + static_cast<std::uint64_t>(s),
                 .policy = MinDegreePolicy::reject_isolated};
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    auto a8 = approx8::solve(ps, idx);
    g_phase1.take(ps, idx, a8);
    auto ex = exact::exact_tds(ps, idx, a8.T.size());
    const double ratio = static_cast<double>(a8.T.size()) / ex.size;
    max_ratio = std::max(max_ratio, ratio);
    if (ratio > 8.0) ++violations;
  }
  char detail[120];
  std::snprintf(detail, sizeof detail,
                "200 instances n<=14, %d violations, empirical max ratio %.3f",
                violations, max_ratio);
  report(2, "factor-8 bound", violations == 0, detail);
}

void criterion3_ptas_bound() {
  int violations = 0;
  double worst_ms = 0.0;
  for (int s = 0; s < 100; ++s) {
    const int n = 6 + s % 7;  // 6..12
    GenSpec spec{.n = n, .width = 3, .height = 3,
                 .seed = 300000ull + static_cast<std::uint64_t>(s),
                 .policy = MinDegreePolicy::reject_isolated};
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    auto ex = exact::exact_tds(ps, idx);
    for (int k = 1; k <= 2; ++k) {
      const auto t0 = clk::now();
      auto pt = ptas::solve(ps, idx, {.k = k});
      worst_ms = std::max(worst_ms, ms_since(t0));
      const double factor = k == 1 ? 4.0 : 2.25;
      if (pt.best.size() > factor * ex.size) ++violations;
    }
  }
  char detail[120];
  std::snprintf(detail, sizeof detail,
                "100 instances, k=1 vs 4x and k=2 vs 2.25x: %d violations; "
                "worst run %.1f ms (<60000)",
                violations, worst_ms);
  report(3, "ptas bound", violations == 0 && worst_ms < 60000.0, detail);
}

void criterion4_oracle_crosscheck() {
  int mismatches = 0;
  int done = 0;
  std::uint64_t s = 0;
  while (done < 100) {
    const int n = 2 + static_cast<int>(s % 11);  // 2..12
    GenSpec spec{.n = n, .width = 3, .height = 3, .seed = 400000ull + s,
                 .policy = MinDegreePolicy::allow};
    ++s;
    auto ps = gen_uniform(spec);
    auto idx = build_index(ps);
    if (!isolated_points(ps, idx).empty()) continue;
    ++done;
    auto fast = exact::exact_tds(ps, idx);
    auto slow = exact::naive_tds(ps, idx);
    if (fast.size != slow.size) ++mismatches;
  }
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "100 instances n<=12, branch-and-bound vs enumeration: %d "
                "size mismatches",
                mismatches);
  report(4, "oracle cross-check", mismatches == 0, detail);
}

void criterion5_phase1_invariants() {
  char detail[96];
  std::snprintf(detail, sizeof detail,
                "%lld approx8 runs from criteria 1-2 audited, %lld failures",
                g_phase1.checked, g_phase1.failures);
  report(5, "phase-1 invariants", g_phase1.checked == 700 &&
                                       g_phase1.failures == 0,
         detail);
}

const char* kCorpus[] = {"p2.emb",   "p3.emb",   "triangle.emb",
                         "long.emb", "star.emb", "lshape.emb"};

void criterion6_reduction_identities() {
  int bad = 0;
  int checked = 0;
  for (const char* name : kCorpus) {
    auto ri = reduction::build(reduction::load_embedding(data_path(name)));
    ++checked;

    int nv = 0, na = 0, ns = 0;
    for (reduction::Role r : ri.roles) {
      using reduction::Role;
      nv += r == Role::vertex;
      na += r == Role::extra || r == Role::gridpt;
      ns += r == Role::support_x || r == Role::support_y || r == Role::support_z;
    }
    if (nv != ri.n || na != 4 * ri.ell + ri.m || ns != 3 * ri.n) ++bad;

    // Exhaustive adjacency audit: chains and support rays, nothing else.
    std::set<std::pair<int, int>> expect;
    auto add = [&](int a, int b) { expect.insert(std::minmax(a, b)); };
    for (const auto& seq : ri.edge_points) {
      for (size_t t = 0; t + 1 < seq.size(); ++t) add(seq[t], seq[t + 1]);
    }
    for (int v = 0; v < ri.n; ++v) {
      const auto& sup = ri.support_map[static_cast<size_t>(v)];
      add(ri.vertex_map[static_cast<size_t>(v)], sup.x);
      add(sup.x, sup.y);
      add(sup.y, sup.z);
    }
    auto idx = build_index(ri.points);
    std::set<std::pair<int, int>> got;
    for_each_close_pair(ri.points, idx,
                        [&](int p, int q) { got.insert(std::minmax(p, q)); });
    if (got != expect) ++bad;
  }
  char detail[120];
  std::snprintf(detail, sizeof detail,
                "%d embeddings: role counts n / 4*ell+m / 3n and exhaustive "
                "consecutive-only adjacency, %d failures",
                checked, bad);
  report(6, "reduction identities", checked >= 5 && bad == 0, detail);
}

void criterion7_equality_desk_scale() {
  const auto t0 = clk::now();
  auto ri = reduction::build(reduction::load_embedding(data_path("p2.emb")));
  auto idx = build_index(ri.points);
  bool ok = ri.points.size() == 13;

  auto cover = exact::exact_vc(ri.n, source_edges(ri));
  ok = ok && cover.size() == 1;

  auto T = reduction::vc_to_tds(ri, cover);
  ok = ok && T.size() == 7 && is_tds(ri.points, idx, T);

  auto ex = exact::exact_tds(ri.points, idx);
  ok = ok && ex.size == 7;

  auto back = reduction::tds_to_vc(ri, ex.opt);
  ok = ok && back.size() == 1;

  const double secs = ms_since(t0) / 1000.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "13-point instance: min-TDS %d = 1 + 2*%d + 2*%d, "
                "vc_to_tds size %d, recovered cover %zu; %.2f s (<10)",
                ex.size, ri.ell, ri.n, T.size(), back.size(), secs);
  report(7, "equality at desk scale", ok && secs < 10.0, detail);
}

void criterion8_claims_checker() {
  int bad = 0;
  int checked = 0;

  // Every TDS produced in criterion 7's flow.
  auto ri = reduction::build(reduction::load_embedding(data_path("p2.emb")));
  auto idx = build_index(ri.points);
  auto cover = exact::exact_vc(ri.n, source_edges(ri));
  for (const Solution& T :
       {reduction::vc_to_tds(ri, cover),
        exact::exact_tds(ri.points, idx, std::nullopt, {}).opt}) {
    ++checked;
    if (!reduction::verify_claims(ri, T).all_pass()) ++bad;
  }

  // vc_to_tds outputs across the full corpus, minimum and full covers.
  for (const char* name : kCorpus) {
    auto cri = reduction::build(reduction::load_embedding(data_path(name)));
    auto ccover = exact::exact_vc(cri.n, source_edges(cri));
    std::vector<int> full(static_cast<size_t>(cri.n));
    for (int v = 0; v < cri.n; ++v) full[static_cast<size_t>(v)] = v;
    for (const auto& c : {ccover, full}) {
      ++checked;
      if (!reduction::verify_claims(cri, reduction::vc_to_tds(cri, c))
               .all_pass())
        ++bad;
    }
  }
  char detail[96];
  std::snprintf(detail, sizeof detail, "%d solutions checked, %d claim failures",
                checked, bad);
  report(8, "claims checker", bad == 0, detail);
}

void criterion9_performance_smoke() {
  const std::array<int, 3> sizes{10000, 20000, 40000};
  std::array<PointSet, 3> sets;
  std::array<double, 3> best{1e300, 1e300, 1e300};
  for (size_t s = 0; s < sizes.size(); ++s) {
    const double side = std::sqrt(static_cast<double>(sizes[s]));
    GenSpec spec{.n = sizes[s], .width = side, .height = side, .seed = 900000,
                 .policy = MinDegreePolicy::reject_isolated};
    sets[s] = gen_uniform(spec);
  }
  // Reps are interleaved across the three sizes so slow drift (heap state,
  // clock frequency) lands on every size alike instead of skewing the
  // doubling ratios; rep 0 is the untimed warmup.
  for (int rep = 0; rep < 10; ++rep) {
    for (size_t s = 0; s < sizes.size(); ++s) {
      const auto t0 = clk::now();
      auto idx = build_index(sets[s]);
      auto res = approx8::solve(sets[s], idx);
      if (rep > 0) best[s] = std::min(best[s], ms_since(t0));
      (void)res;
    }
  }
  double worst_ratio = 0.0;
  std::string curve;
  for (size_t s = 0; s < sizes.size(); ++s) {
    if (s > 0) worst_ratio = std::max(worst_ratio, best[s] / best[s - 1]);
    char seg[48];
    std::snprintf(seg, sizeof seg, "%s n=%d: %.1f ms", s == 0 ? "" : ",",
                  sizes[s], best[s]);
    curve += seg;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "density 1, min of 9:%s; worst doubling ratio %.2f (<=2.5)",
                curve.c_str(), worst_ratio);
  report(9, "performance smoke", worst_ratio <= 2.5, detail);
}

void criterion10_determinism() {
  auto dir = scratch_dir();
  bool ok = true;

  // generate twice, byte-equal
  auto g1 = (dir / "d1.pts").string();
  auto g2 = (dir / "d2.pts").string();
  std::ostringstream sink;
  cli::GenerateArgs gen{.n = 80, .width = 9, .height = 9, .seed = 4242,
                        .allow_isolated = false, .out = g1};
  ok = ok && cli::cmd_generate(gen, sink, sink) == kExitOk;
  gen.out = g2;
  ok = ok && cli::cmd_generate(gen, sink, sink) == kExitOk;
  ok = ok && slurp(g1) == slurp(g2);

  // each solver twice, byte-equal solutions (exact on an oracle-sized box)
  auto small = (dir / "dsmall.pts").string();
  cli::GenerateArgs gs{.n = 12, .width = 3, .height = 3, .seed = 171,
                       .allow_isolated = false, .out = small};
  ok = ok && cli::cmd_generate(gs, sink, sink) == kExitOk;
  for (const char* algo : {"approx8", "ptas", "exact"}) {
    const bool big = std::string(algo) != "exact";
    auto s1 = (dir / (std::string("d1.") + algo + ".sol")).string();
    auto s2 = (dir / (std::string("d2.") + algo + ".sol")).string();
    cli::SolveArgs sv{.instance = big ? g1 : small, .algo = algo, .k = 2,
                      .max_nodes = 0, .out = s1};
    ok = ok && cli::cmd_solve(sv, sink, sink) == kExitOk;
    sv.out = s2;
    ok = ok && cli::cmd_solve(sv, sink, sink) == kExitOk;
    ok = ok && !slurp(s1).empty() && slurp(s1) == slurp(s2);
  }

  // bench twice under --repro, byte-equal CSV including millis
  auto bdir = dir / "bench";
  fs::create_directories(bdir);
  for (int i = 1; i <= 2; ++i) {
    cli::GenerateArgs g{.n = 14, .width = 3.5, .height = 3.5,
                        .seed = static_cast<std::uint64_t>(i),
                        .allow_isolated = false,
                        .out = (bdir / ("i" + std::to_string(i) + ".pts"))
                                   .string()};
    ok = ok && cli::cmd_generate(g, sink, sink) == kExitOk;
  }
  auto c1 = (dir / "r1.csv").string();
  auto c2 = (dir / "r2.csv").string();
  cli::BenchArgs bench{.dir = bdir.string(),
                       .algos = {"approx8", "exact", "ptas"},
                       .ks = {1, 2},
                       .out_csv = c1,
                       .max_nodes = 0,
                       .repro = true};
  ok = ok && cli::cmd_bench(bench, sink, sink) == kExitOk;
  bench.out_csv = c2;
  ok = ok && cli::cmd_bench(bench, sink, sink) == kExitOk;
  const std::string csv = slurp(c1);
  ok = ok && !csv.empty() && csv == slurp(c2);
  ok = ok && csv.rfind("instance,n,algo,k,size,millis,seed,valid\n", 0) == 0;

  report(10, "determinism", ok,
         "generate, approx8/ptas/exact solve, bench --repro: reruns "
         "byte-identical");
}

}  // namespace

int main() {
  std::printf("acceptance gate: unit disk total domination suite\n");
  std::fflush(stdout);
  // Wall-time smoke runs first, before the other criteria churn the heap.
  criterion9_performance_smoke();
  criterion1_validity();
  criterion2_factor8();
  criterion3_ptas_bound();
  criterion4_oracle_crosscheck();
  criterion5_phase1_invariants();
  criterion6_reduction_identities();
  criterion7_equality_desk_scale();
  criterion8_claims_checker();
  criterion10_determinism();
  for (int c = 1; c <= 10; ++c) {
    std::printf("%s\n", g_lines[static_cast<size_t>(c)].c_str());
  }
  if (g_failures == 0) {
    std::printf("acceptance: all 10 criteria PASS\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
